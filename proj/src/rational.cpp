#include "motzkin/rational.hpp"

#include <numeric>

namespace motzkin {

Rational::Rational(i64 num, i64 den) {
    if (den == 0) fail(errc::invalid_input, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1; // num == 0
    num_ = num / g;
    den_ = den / g;
}

int Rational::cmp(const Rational& o) const {
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) fail(errc::undefined_reciprocal, "reciprocal of zero");
    return Rational(num_ < 0 ? -den_ : den_, num_ < 0 ? -num_ : num_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int places) const {
    __int128 n = num_ < 0 ? -static_cast<__int128>(num_) : num_;
    __int128 d = den_;
    __int128 ip = n / d;
    __int128 frac = n % d;
    std::string digits;
    digits.reserve(places);
    for (int i = 0; i < places; ++i) {
        frac *= 10;
        digits.push_back(static_cast<char>('0' + static_cast<int>(frac / d)));
        frac %= d;
    }
    if (2 * frac >= d) { // round half away from zero, carry leftward
        int i = places - 1;
        while (i >= 0 && digits[i] == '9') digits[i--] = '0';
        if (i >= 0) {
            ++digits[i];
        } else {
            ++ip;
        }
    }
    std::string ip_str;
    if (ip == 0) {
        ip_str = "0";
    } else {
        while (ip > 0) {
            ip_str.insert(ip_str.begin(), static_cast<char>('0' + static_cast<int>(ip % 10)));
            ip /= 10;
        }
    }
    std::string out = (num_ < 0 ? "-" : "") + ip_str;
    if (places > 0) out += "." + digits;
    return out;
}

} // namespace motzkin
