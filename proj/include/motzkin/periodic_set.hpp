#pragma once

// Periodic subsets of the nonnegative integers, given by a 0/1 pattern over
// one period. These are the witnesses for density lower bounds.

#include <cstdint>
#include <string>
#include <vector>

#include "motzkin/difference_set.hpp"
#include "motzkin/rational.hpp"

namespace motzkin {

struct PeriodicSet {
    i64 period = 1;
    std::vector<std::uint8_t> pattern; // size == period, entries 0/1
    Rational density;                  // set bits / period, reduced

    static PeriodicSet make(std::vector<std::uint8_t> bits);

    std::string pattern_string() const; // e.g. "1100000"
    std::vector<i64> selected() const;  // residues with a set bit
};

// True iff the infinite periodic set avoids every difference in M, i.e. no
// two selected positions (across period boundaries too) differ by an element
// of M. Checks pattern[i] && pattern[(i+d) mod q] for every d in M.
bool validate_periodic_mset(const PeriodicSet& p, const DifferenceSet& M);

} // namespace motzkin
