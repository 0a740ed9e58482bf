#include "motzkin/periodic_set.hpp"

#include <numeric>

namespace motzkin {

PeriodicSet PeriodicSet::make(std::vector<std::uint8_t> bits) {
    if (bits.empty()) fail(errc::invalid_input, "periodic set needs period >= 1");
    i64 ones = 0;
    for (std::uint8_t b : bits) {
        if (b > 1) fail(errc::invalid_input, "pattern entries must be 0/1");
        ones += b;
    }
    PeriodicSet p;
    p.period = static_cast<i64>(bits.size());
    p.pattern = std::move(bits);
    p.density = Rational(ones, p.period);
    return p;
}

std::string PeriodicSet::pattern_string() const {
    std::string s;
    s.reserve(pattern.size());
    for (std::uint8_t b : pattern) s.push_back(b ? '1' : '0');
    return s;
}

std::vector<i64> PeriodicSet::selected() const {
    std::vector<i64> out;
    for (i64 i = 0; i < period; ++i)
        if (pattern[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

bool validate_periodic_mset(const PeriodicSet& p, const DifferenceSet& M) {
    const i64 q = p.period;
    for (i64 d : M.elements()) {
        i64 dd = d % q; // dd == 0 forbids any set bit at all
        for (i64 i = 0; i < q; ++i) {
            if (p.pattern[static_cast<std::size_t>(i)] &&
                p.pattern[static_cast<std::size_t>((i + dd) % q)])
                return false;
        }
    }
    return true;
}

} // namespace motzkin
