#pragma once

// Exact reduced fractions over 64-bit integers. Comparisons cross-multiply in
// 128-bit arithmetic, so any num/den pair representable in int64 compares
// exactly. No floating point anywhere in the value path; the decimal rendering
// is produced by integer long division.

#include <cstdint>
#include <string>

#include "motzkin/errors.hpp"

namespace motzkin {

using i64 = std::int64_t;

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(i64 num, i64 den);

    i64 num() const { return num_; }
    i64 den() const { return den_; }

    // -1, 0, +1
    int cmp(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(o) >= 0; }

    bool is_zero() const { return num_ == 0; }

    Rational reciprocal() const;

    // "2/7"; integers render without the denominator ("3", not "3/1").
    std::string str() const;
    // Fixed-point rendering, rounded half away from zero at the last place.
    std::string decimal(int places = 12) const;

  private:
    i64 num_; // sign lives here
    i64 den_; // always >= 1
};

} // namespace motzkin
