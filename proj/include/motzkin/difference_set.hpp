#pragma once

// A finite set of forbidden differences M: positive integers, stored sorted
// and deduplicated, divided through by their gcd. All downstream quantities
// (kappa, mu, chromatic bounds) are invariant under that scaling, so callers
// always see the normalized form; the factor is kept for reporting.

#include <cstdint>
#include <vector>

#include "motzkin/errors.hpp"
#include "motzkin/rational.hpp"

namespace motzkin {

class DifferenceSet {
  public:
    // Largest accepted raw element. Keeps every intermediate product
    // (element x modulus, cross-multiplied comparisons) exactly representable
    // in the 64/128-bit arithmetic used here; larger inputs are rejected
    // rather than silently wrapped.
    static constexpr i64 kMaxElement = 1'000'000'000;

    // Sorts, deduplicates, checks the range, divides by the gcd.
    static DifferenceSet normalize(std::vector<i64> raw);

    const std::vector<i64>& elements() const { return elements_; }
    i64 factor() const { return factor_; }
    std::size_t size() const { return elements_.size(); }
    i64 max_element() const { return elements_.back(); }
    i64 duplicates_removed() const { return duplicates_removed_; }

    std::string str() const;

  private:
    DifferenceSet() = default;
    std::vector<i64> elements_;
    i64 factor_ = 1;
    i64 duplicates_removed_ = 0;
};

} // namespace motzkin
