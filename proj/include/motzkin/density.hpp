#pragma once

// mu(M): the maximal density of a set of nonnegative integers no two of whose
// elements differ by a member of M. Three tools:
//
//  * max_mset_prefix / haralambis_upper: the prefix-count upper bound. If
//    every M-set containing 0 has at most f(k) elements in [0, k], then
//    mu <= f(k)/(k+1); the bound reported is the minimum over k.
//  * mu_exact_small: exact mu via the window graph. Nodes are the
//    internally consistent 0/1 windows of length max(M); appending a bit is
//    an edge weighted by that bit; mu equals the maximum cycle mean, found
//    with the classical walk-length dynamic program per strongly connected
//    component. Exponential in max(M) in the worst case, hence "small".
//  * density_bounds / coloring_numbers: the packaged sandwich
//    kappa <= mu <= prefix bound, with exact mu filled in when affordable.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motzkin/difference_set.hpp"
#include "motzkin/kappa.hpp"
#include "motzkin/periodic_set.hpp"
#include "motzkin/rational.hpp"

namespace motzkin {

// f(k) for k = 0..k_max where f(k) = max |S ∩ [0,k]| over M-sets S with
// 0 in S. May stop early if the window state table outgrows an internal cap;
// the returned vector then covers a shorter range (never empty).
std::vector<i64> mset_prefix_counts(const DifferenceSet& M, i64 k_max);

struct PrefixResult {
    i64 count = 0;
    std::vector<i64> witness; // one maximal M-set prefix, contains 0
};

// f(k) plus a witness attaining it. Errors out instead of degrading.
PrefixResult max_mset_prefix(const DifferenceSet& M, i64 k);

struct HaralambisBound {
    Rational alpha;          // min over 1 <= k <= effective_k_max of f(k)/(k+1)
    i64 best_k = 0;          // smallest minimizing k
    i64 effective_k_max = 0; // < requested k_max only if the state cap bit
};

HaralambisBound haralambis_upper(const DifferenceSet& M, i64 k_max);

struct MuResult {
    Rational mu;
    PeriodicSet witness; // smallest-period, lexicographically smallest pattern
    i64 window_count = 0;
};

// Exact mu. Throws state_cap_exceeded when the valid-window count passes
// state_cap (or max(M) > 62, where the 64-bit window encoding ends), and
// time_budget_exceeded when the optional deadline lapses. Callers fall back
// to density_bounds without the exact part.
MuResult mu_exact_small(const DifferenceSet& M, i64 state_cap = i64{1} << 22,
                        std::optional<double> time_budget_s = std::nullopt);

struct DensityOptions {
    i64 k_max = 0; // 0: max(3 * second smallest element, 40)
    i64 state_cap = i64{1} << 22;
    bool want_exact = true;
    std::optional<double> time_budget_s;
};

struct DensityBounds {
    Rational lower; // kappa
    std::string lower_method;
    Rational upper;
    std::string upper_method;
    i64 upper_k = 0; // minimizing prefix length behind the upper bound
    std::optional<Rational> exact;
    std::string exact_method;
    std::optional<PeriodicSet> witness;
    KappaResult kappa;
};

DensityBounds density_bounds(const DifferenceSet& M, const DensityOptions& opts = {});

struct ColoringNumbers {
    std::optional<Rational> chi_f; // 1 / mu, when mu is exact
    Rational chi_c_upper;          // 1 / lower bound
};

ColoringNumbers coloring_numbers(const DensityBounds& b);

} // namespace motzkin
