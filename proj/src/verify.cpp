#include "motzkin/verify.hpp"

#include <chrono>

namespace motzkin {

namespace {

i64 opt(const std::optional<i64>& v, const char* what) {
    if (!v) fail(errc::internal, std::string("family case is missing index ") + what);
    return *v;
}

} // namespace

ProofWitness replay_proof_witness(const FamilyCase& fc) {
    const i64 a = fc.a, n = fc.n;
    i64 c = 0, m = 0;
    switch (fc.label) {
        case CaseLabel::F1CaseIJ:
        case CaseLabel::F1N1:
            c = 1;
            m = 3 * a + 1;
            break;
        case CaseLabel::F1N2:
            c = a + 1 + opt(fc.i, "i");
            m = a + n;
            break;
        case CaseLabel::F1N3:
            c = a + 2 + opt(fc.i, "i");
            m = 2 * a + 1 + n;
            break;
        case CaseLabel::F2O1:
        case CaseLabel::F2P1:
        case CaseLabel::F2RemarkX:
            c = 1;
            m = 4 * a + 1;
            break;
        case CaseLabel::F2O2:
            c = 2 * a + 1 + opt(fc.i, "i");
            m = a + n;
            break;
        case CaseLabel::F2O3:
            c = 2 * a + 2 + opt(fc.i, "i");
            m = 3 * a + 1 + n;
            break;
        case CaseLabel::F2P2:
            c = 4 * (a + 1) + opt(fc.i, "i");
            m = a + n;
            break;
        case CaseLabel::F2P3:
            c = 4 * a + 5 + opt(fc.i, "i");
            m = 3 * a + n + 1;
            break;
        case CaseLabel::F2Mod4:
            if (n % 4 != 0) {
                m = 5 * a + 2;
                c = m / 4;
            } else {
                m = 2 * a + n + 1;
                c = (m - 1) / 4;
            }
            break;
        case CaseLabel::F2S:
            m = 5 * a + 2;
            c = (m - 5) / 4;
            break;
        case CaseLabel::Uncovered:
            fail(errc::no_witness, "uncovered case has no proof witness");
    }
    ProofWitness pw;
    pw.c = c;
    pw.m = m;
    pw.value = witness_value(build_set(fc), c, m);
    return pw;
}

bool VerificationRecord::ok() const {
    if (status != RecordStatus::Verified) return true; // skips are not violations
    if (!kappa_ge_bound || !replay_ok) return false;
    if (ceiling_ok && !*ceiling_ok) return false;
    if (exactness_confirmed && !*exactness_confirmed) return false;
    return true;
}

namespace {

VerificationRecord verify_one(const FamilyCase& fc, const VerifyOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationRecord rec;
    rec.status = RecordStatus::Verified;
    rec.family = fc.family;
    rec.a = fc.a;
    rec.n = fc.n;
    rec.fc = fc;

    DifferenceSet M = build_set(fc);
    KappaResult k = kappa_exact(M);
    rec.kappa = k.value;
    rec.kappa_c = k.witness_c;
    rec.kappa_m = k.witness_m;
    rec.kappa_ge_bound = k.value >= fc.bound;

    rec.replay = replay_proof_witness(fc);
    rec.replay_ok = rec.replay.value == fc.bound;

    if (fc.family == Family::F2) {
        // global ceiling: kappa <= 1/4 for even a, strictly below for odd a
        Rational quarter(1, 4);
        rec.ceiling_ok = fc.a % 2 == 0 ? k.value <= quarter : k.value < quarter;
    }

    if (fc.exact && opts.exactness_checks) {
        HaralambisBound hb = haralambis_upper(M, 3 * fc.a);
        rec.mu_lower = k.value;
        rec.mu_upper = hb.alpha;
        bool confirmed = k.value == fc.bound && hb.alpha == fc.bound;
        if (confirmed && M.max_element() <= opts.mu_max_element) {
            try {
                MuResult mu = mu_exact_small(M, opts.state_cap, opts.time_budget_s);
                confirmed = mu.mu == fc.bound;
                rec.mu_lower = mu.mu;
                rec.mu_upper = mu.mu;
            } catch (const Error& e) {
                if (e.code != errc::state_cap_exceeded && e.code != errc::time_budget_exceeded)
                    throw;
                // bounds stay; confirmation rests on kappa + prefix bound
            }
        }
        rec.exactness_confirmed = confirmed;
    }

    rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

template <typename Classify>
std::vector<VerificationRecord> sweep(Family family, i64 a_lo, i64 a_hi, i64 n_lo, i64 n_hi,
                                      const VerifyOptions& opts, Classify classify) {
    if (a_lo < 1 || n_lo < 1 || a_hi < a_lo || n_hi < n_lo)
        fail(errc::invalid_input, "sweep ranges must satisfy 1 <= lo <= hi");
    std::vector<VerificationRecord> out;
    for (i64 a = a_lo; a <= a_hi; ++a) {
        for (i64 n = n_lo; n <= n_hi; ++n) {
            VerificationRecord rec;
            rec.family = family;
            rec.a = a;
            rec.n = n;
            try {
                FamilyCase fc = classify(a, n);
                if (!fc.covered()) {
                    rec.status = RecordStatus::Uncovered;
                    rec.fc = fc;
                } else {
                    rec = verify_one(fc, opts);
                }
            } catch (const Error& e) {
                if (e.code != errc::degenerate_input) throw;
                rec.status = RecordStatus::Degenerate;
                rec.fc.family = family;
                rec.fc.a = a;
                rec.fc.n = n;
            }
            out.push_back(std::move(rec));
        }
    }
    return out;
}

} // namespace

std::vector<VerificationRecord> sweep_f1(i64 a_lo, i64 a_hi, i64 n_lo, i64 n_hi,
                                         const VerifyOptions& opts) {
    return sweep(Family::F1, a_lo, a_hi, n_lo, n_hi, opts, classify_f1);
}

std::vector<VerificationRecord> sweep_f2(i64 a_lo, i64 a_hi, i64 n_lo, i64 n_hi,
                                         const VerifyOptions& opts) {
    return sweep(Family::F2, a_lo, a_hi, n_lo, n_hi, opts, classify_f2);
}

i64 count_violations(const std::vector<VerificationRecord>& records) {
    i64 v = 0;
    for (const auto& r : records)
        if (!r.ok()) ++v;
    return v;
}

} // namespace motzkin
