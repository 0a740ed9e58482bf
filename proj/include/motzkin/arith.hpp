#pragma once

// Residue primitives shared by the kappa scan and the witness constructions.

#include <cstdint>

#include "motzkin/errors.hpp"
#include "motzkin/rational.hpp"

namespace motzkin {

// |x|_m: distance from x to the nearest multiple of m, in [0, floor(m/2)].
// Defined for any integer x; m must be positive.
inline i64 abs_residue(i64 x, i64 m) {
    if (m < 1) fail(errc::invalid_modulus, "abs_residue: modulus must be positive");
    i64 r = x % m;
    if (r < 0) r += m;
    return r <= m - r ? r : m - r;
}

// (a*b) mod m without overflow, for nonnegative a, b and positive m.
inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>((static_cast<__int128>(a) * b) % m);
}

} // namespace motzkin
