#include "motzkin/kappa.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace motzkin {

namespace {

struct ScanBest {
    i64 d = 0; // min_i |k * m_i|_m at (k, m)
    i64 m = 2;
    i64 k = 1;
    bool any = false;
};

// Best multiplier for one modulus: the largest d over k in [1, m/2], smallest
// k on ties. Residues are maintained incrementally (r_i(k+1) = r_i(k) + m_i),
// so the inner loop is addition-only.
void scan_modulus(const std::vector<i64>& elems, i64 m, ScanBest& best) {
    const std::size_t s = elems.size();
    std::vector<i64> step(s), cur(s);
    for (std::size_t i = 0; i < s; ++i) {
        step[i] = elems[i] % m;
        cur[i] = step[i];
    }
    const i64 kmax = m / 2;
    for (i64 k = 1; k <= kmax; ++k) {
        if (k > 1) {
            for (std::size_t i = 0; i < s; ++i) {
                cur[i] += step[i];
                if (cur[i] >= m) cur[i] -= m;
            }
        }
        i64 d = m; // > any abs residue
        for (std::size_t i = 0; i < s; ++i) {
            i64 r = cur[i];
            i64 ar = r <= m - r ? r : m - r;
            if (ar < d) d = ar;
            if (d == 0) break;
        }
        // strict improvement only: earliest (m, k) wins ties
        if (!best.any || static_cast<__int128>(d) * best.m > static_cast<__int128>(best.d) * m) {
            best = {d, m, k, true};
        }
    }
}

KappaResult finish(const ScanBest& best) {
    i64 g = std::gcd(best.k, best.m);
    if (best.d % g != 0)
        fail(errc::internal, "witness reduction: achieved distance not divisible by gcd");
    KappaResult res;
    res.witness_c = best.k / g;
    res.witness_m = best.m / g;
    res.achieved_d = best.d / g;
    res.value = Rational(best.d, best.m);
    return res;
}

} // namespace

Rational witness_value(const DifferenceSet& M, i64 c, i64 m) {
    if (m < 2) fail(errc::invalid_modulus, "witness modulus must be >= 2");
    if (c < 1) fail(errc::invalid_input, "witness multiplier must be positive");
    i64 d = m;
    for (i64 e : M.elements()) {
        i64 ar = abs_residue(mul_mod(c % m, e % m, m), m);
        if (ar < d) d = ar;
    }
    return Rational(d, m);
}

KappaResult kappa_exact(const DifferenceSet& M) {
    if (M.size() == 1) {
        // normalized singleton is {1}: half density, witness (1, 2)
        KappaResult res;
        res.value = Rational(1, 2);
        res.witness_c = 1;
        res.witness_m = 2;
        res.achieved_d = 1;
        return res;
    }
    const auto& e = M.elements();
    std::vector<i64> sums;
    sums.reserve(e.size() * (e.size() - 1) / 2);
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) sums.push_back(e[i] + e[j]);
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());

    ScanBest best;
    for (i64 m : sums) scan_modulus(e, m, best);
    KappaResult res = finish(best);
    if (res.value.is_zero())
        fail(errc::internal, "pair-sum scan produced zero kappa for a multi-element set");
    return res;
}

KappaResult kappa_sweep_oracle(const DifferenceSet& M, i64 m_max) {
    if (m_max < 2) fail(errc::invalid_input, "sweep bound must be >= 2");
    ScanBest best;
    for (i64 m = 2; m <= m_max; ++m) scan_modulus(M.elements(), m, best);
    return finish(best);
}

PeriodicSet witness_mset(const DifferenceSet& M, i64 c, i64 m) {
    if (m < 2) fail(errc::invalid_modulus, "witness modulus must be >= 2");
    if (c < 1) fail(errc::invalid_input, "witness multiplier must be positive");
    if (std::gcd(c, m) != 1)
        fail(errc::invalid_input, "witness multiplier must be coprime to the modulus");
    i64 d = m;
    for (i64 e : M.elements()) {
        i64 ar = abs_residue(mul_mod(c % m, e % m, m), m);
        if (ar < d) d = ar;
    }
    if (d == 0) fail(errc::no_witness, "witness pair achieves distance 0; no periodic set");

    // s is selected iff c*s mod m < d; multiplication by c permutes residues,
    // so exactly d positions per period are selected. Two selected positions
    // differing by m_i would force |c*m_i|_m < d.
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m), 0);
    i64 cs = 0;
    const i64 cm = c % m;
    for (i64 s = 0; s < m; ++s) {
        if (cs < d) bits[static_cast<std::size_t>(s)] = 1;
        cs += cm;
        if (cs >= m) cs -= m;
    }
    PeriodicSet p = PeriodicSet::make(std::move(bits));
    if (p.density != Rational(d, m))
        fail(errc::internal, "witness periodic set density mismatch");
    if (!validate_periodic_mset(p, M))
        fail(errc::internal, "witness periodic set fails validation");
    return p;
}

} // namespace motzkin
