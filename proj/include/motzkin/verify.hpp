#pragma once

// Sweep harness: classify every (a, n) in a rectangle, recompute kappa from
// scratch, and check it against the closed-form bound; replay the per-case
// residue witness and confirm it reproduces the bound exactly; on cases whose
// bound is known to be exact, confirm kappa = prefix bound = mu. Family-2
// records also get the global ceiling check (kappa <= 1/4 for even a,
// strictly below 1/4 for odd a).

#include <cstdint>
#include <optional>
#include <vector>

#include "motzkin/density.hpp"
#include "motzkin/families.hpp"
#include "motzkin/kappa.hpp"
#include "motzkin/rational.hpp"

namespace motzkin {

struct VerifyOptions {
    bool exactness_checks = true; // run prefix bound + mu on exact-flagged cases
    i64 mu_max_element = 18;      // skip exact mu when max(M) exceeds this
    i64 state_cap = i64{1} << 22;
    double time_budget_s = 5.0;   // per record; mu silently downgrades
};

enum class RecordStatus { Verified, Uncovered, Degenerate };

struct ProofWitness {
    i64 c = 0;
    i64 m = 0;
    Rational value;
};

// The witness pair used to prove each case's bound.
ProofWitness replay_proof_witness(const FamilyCase& fc);

struct VerificationRecord {
    RecordStatus status = RecordStatus::Uncovered;
    Family family = Family::F1;
    i64 a = 0;
    i64 n = 0;
    FamilyCase fc; // meaningful unless status == Degenerate

    Rational kappa;
    i64 kappa_c = 0;
    i64 kappa_m = 0;
    bool kappa_ge_bound = false;

    ProofWitness replay;
    bool replay_ok = false;

    std::optional<bool> exactness_confirmed;
    std::optional<Rational> mu_lower, mu_upper;
    std::optional<bool> ceiling_ok; // family 2 ceiling

    double wall_seconds = 0; // in-memory only, never serialized

    bool ok() const;
};

std::vector<VerificationRecord> sweep_f1(i64 a_lo, i64 a_hi, i64 n_lo, i64 n_hi,
                                         const VerifyOptions& opts = {});
std::vector<VerificationRecord> sweep_f2(i64 a_lo, i64 a_hi, i64 n_lo, i64 n_hi,
                                         const VerifyOptions& opts = {});

i64 count_violations(const std::vector<VerificationRecord>& records);

} // namespace motzkin
