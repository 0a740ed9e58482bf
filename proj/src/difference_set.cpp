#include "motzkin/difference_set.hpp"

#include <algorithm>
#include <numeric>

namespace motzkin {

DifferenceSet DifferenceSet::normalize(std::vector<i64> raw) {
    if (raw.empty()) fail(errc::invalid_input, "difference set must be nonempty");
    for (i64 v : raw) {
        if (v < 1) fail(errc::invalid_input, "difference set elements must be positive");
        if (v > kMaxElement)
            fail(errc::range_exceeded, "element " + std::to_string(v) + " exceeds the supported range (" +
                                           std::to_string(kMaxElement) + ")");
    }
    std::sort(raw.begin(), raw.end());
    std::size_t before = raw.size();
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    i64 g = 0;
    for (i64 v : raw) g = std::gcd(g, v);
    for (i64& v : raw) v /= g;

    DifferenceSet ds;
    ds.elements_ = std::move(raw);
    ds.factor_ = g;
    ds.duplicates_removed_ = static_cast<i64>(before - ds.elements_.size());
    return ds;
}

std::string DifferenceSet::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(elements_[i]);
    }
    return s + "}";
}

} // namespace motzkin
