#pragma once

// Closed-form kappa bounds for the two parametric families
//     F1: {a, a+1, 2a+1, n}        F2: {a, a+1, 2a+1, 3a+1, n}.
// classify_f1 / classify_f2 place (a, n) into the case of the matching
// closed-form bound (block membership plus, for F2, the residue of a mod 4)
// and report the bound, whether it is known to be exact (kappa = mu), and the
// indices that reconstruct n. partition_check verifies that the i-indexed
// blocks tile an interval of integers with no gaps or overlaps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motzkin/difference_set.hpp"
#include "motzkin/rational.hpp"

namespace motzkin {

enum class Family { F1, F2 };

enum class CaseLabel {
    F1CaseIJ, // n = a + (3a+1)j + l, 0 <= j <= a-1, 0 <= l <= a
    F1N1,
    F1N2,
    F1N3,
    F2O1, // a ≡ 0 (mod 4) blocks
    F2O2,
    F2O3,
    F2P1, // a ≡ 1 (mod 4) blocks
    F2P2,
    F2P3,
    F2Mod4,    // a ≡ 2 (mod 4), branch on n mod 4
    F2S,       // a ≡ 3 (mod 4), n in the S_i residue set
    F2RemarkX, // a ≡ 0 or 1 (mod 4), n below the block start but in the X_j union
    Uncovered,
};

const char* label_name(CaseLabel label);

struct FamilyCase {
    Family family = Family::F1;
    i64 a = 0;
    i64 n = 0;
    CaseLabel label = CaseLabel::Uncovered;
    std::optional<i64> i, j, l, q, r, t;
    Rational bound; // lower bound for kappa(M); 0/1 when uncovered
    bool exact = false; // true when the bound is also mu(M)
    bool covered() const { return label != CaseLabel::Uncovered; }
};

struct BlockTriple {
    std::vector<i64> b1, b2, b3; // consecutive runs; b3 (or b2) may be empty
};

// F1 blocks with base (3a+2)a + (3a+1)i: lengths a+1, a+floor(a/3)+1,
// a-1-floor(a/3); they tile one period 3a+1.
BlockTriple f1_blocks(i64 a, i64 i);

// F2 blocks for a ≡ 0 (mod 4), base (8a+3)a + (4a+1)i:
// lengths 2a+1, 2a-a/2+1, a/2-1 (period 4a+1).
BlockTriple f2_blocks_mod0(i64 a, i64 i);

// F2 blocks for a ≡ 1 (mod 4), base (16a+17)a + 3 + (4a+1)i:
// lengths 2a+1, (3a+1)/2, (a-1)/2 (period 4a+1).
BlockTriple f2_blocks_mod1(i64 a, i64 i);

// Throws degenerate_input when n collides with a fixed element of the family.
FamilyCase classify_f1(i64 a, i64 n);
FamilyCase classify_f2(i64 a, i64 n);

DifferenceSet build_set(const FamilyCase& fc);

enum class Observation { Obs21, Obs31, Obs33 }; // CLI ids 2.1, 3.1, 3.3

struct PartitionReport {
    Observation obs;
    i64 a = 0;
    i64 start = 0;
    i64 period = 0;
    i64 horizon = 0;
    bool tiles = false;      // blocks cover [start, horizon] exactly, in order
    i64 covered_to = 0;      // last contiguously covered integer
    std::string failure;     // empty when tiles
    i64 excluded_claim = 0; // the one integer the union claim names as missing
    // True when that integer is exactly start-1. The blocks only begin at
    // `start`, so all of [0, start-1] is outside them, not just the named
    // point; this field reports the discrepancy instead of asserting the
    // claim literally.
    bool excluded_below_start = false;
};

PartitionReport partition_check(Observation obs, i64 a, i64 horizon);

} // namespace motzkin
