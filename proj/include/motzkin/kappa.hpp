#pragma once

// kappa(M): the best density guarantee obtainable from a single residue
// witness. For a witness pair (c, m) the guaranteed value is
//     (1/m) * min_i |c * m_i|_m
// and kappa is the maximum of that expression. For finite M the maximum is
// attained with m restricted to pairwise sums m_i + m_j of distinct elements
// and 1 <= k <= m/2; kappa_exact scans exactly that space. The sweep oracle
// scans every modulus up to a bound instead and exists so the two can be
// checked against each other.

#include <cstdint>

#include "motzkin/arith.hpp"
#include "motzkin/difference_set.hpp"
#include "motzkin/periodic_set.hpp"
#include "motzkin/rational.hpp"

namespace motzkin {

struct KappaResult {
    Rational value;
    i64 witness_c = 0; // gcd(witness_c, witness_m) == 1, 1 <= c <= m/2
    i64 witness_m = 0;
    i64 achieved_d = 0; // min_i |c * m_i|_m
};

// Value of one witness pair; no coprimality required, m >= 2, c >= 1.
Rational witness_value(const DifferenceSet& M, i64 c, i64 m);

// Exact kappa via the pair-sum scan. Ties broken by the scan order: smallest
// modulus first, then smallest multiplier; the reported witness is reduced to
// a coprime pair. The singleton set {1} short-circuits to 1/2 with witness
// (1, 2).
KappaResult kappa_exact(const DifferenceSet& M);

// Brute-force maximum over all m in [2, m_max], k in [1, m/2]. Same
// tie-breaking and witness reduction as kappa_exact.
KappaResult kappa_sweep_oracle(const DifferenceSet& M, i64 m_max);

// The periodic set {s : (c*s mod m) < d} where d = min_i |c * m_i|_m.
// Requires gcd(c, m) == 1; density is exactly d/m and the result is a valid
// M-set (validated before return).
PeriodicSet witness_mset(const DifferenceSet& M, i64 c, i64 m);

} // namespace motzkin
