#include "motzkin/families.hpp"

#include <algorithm>
#include <limits>

namespace motzkin {

namespace {

constexpr i64 kMaxParam = DifferenceSet::kMaxElement;

void check_params(i64 a, i64 n) {
    if (a < 1 || n < 1) fail(errc::invalid_input, "family parameters must be positive");
    if (a > kMaxParam || n > kMaxParam)
        fail(errc::range_exceeded, "family parameter exceeds the supported range");
}

std::vector<i64> run(i64 first, i64 len) {
    std::vector<i64> v;
    if (len < 0) len = 0;
    v.reserve(static_cast<std::size_t>(len));
    for (i64 x = 0; x < len; ++x) v.push_back(first + x);
    return v;
}

// Keeps base + one period away from i64 overflow before narrowing.
i64 narrow_base(__int128 base, i64 period) {
    if (base + period > (std::numeric_limits<i64>::max)() / 2)
        fail(errc::range_exceeded, "block position exceeds the supported range");
    return static_cast<i64>(base);
}

// Block starts can overflow 64 bits only for absurd a; compare in 128 bits.
bool at_least(i64 n, __int128 start) { return static_cast<__int128>(n) >= start; }

} // namespace

const char* label_name(CaseLabel label) {
    switch (label) {
        case CaseLabel::F1CaseIJ: return "F1-CaseI-J";
        case CaseLabel::F1N1: return "F1-N1";
        case CaseLabel::F1N2: return "F1-N2";
        case CaseLabel::F1N3: return "F1-N3";
        case CaseLabel::F2O1: return "F2-O1";
        case CaseLabel::F2O2: return "F2-O2";
        case CaseLabel::F2O3: return "F2-O3";
        case CaseLabel::F2P1: return "F2-P1";
        case CaseLabel::F2P2: return "F2-P2";
        case CaseLabel::F2P3: return "F2-P3";
        case CaseLabel::F2Mod4: return "F2-MOD4";
        case CaseLabel::F2S: return "F2-S";
        case CaseLabel::F2RemarkX: return "F2-REMARK-X";
        case CaseLabel::Uncovered: return "UNCOVERED";
    }
    return "?";
}

BlockTriple f1_blocks(i64 a, i64 i) {
    check_params(a, 1);
    if (i < 0) fail(errc::invalid_parameter, "block index must be >= 0");
    const i64 base =
        narrow_base(static_cast<__int128>(3 * a + 2) * a + static_cast<__int128>(3 * a + 1) * i,
                    3 * a + 1);
    BlockTriple b;
    b.b1 = run(base, a + 1);
    b.b2 = run(base + a + 1, a + a / 3 + 1);
    b.b3 = run(base + 2 * (a + 1) + a / 3, a - 1 - a / 3);
    return b;
}

BlockTriple f2_blocks_mod0(i64 a, i64 i) {
    check_params(a, 1);
    if (a % 4 != 0) fail(errc::invalid_parameter, "these blocks require a ≡ 0 (mod 4)");
    if (i < 0) fail(errc::invalid_parameter, "block index must be >= 0");
    const i64 base =
        narrow_base(static_cast<__int128>(8 * a + 3) * a + static_cast<__int128>(4 * a + 1) * i,
                    4 * a + 1);
    BlockTriple b;
    b.b1 = run(base, 2 * a + 1);
    b.b2 = run(base + 2 * a + 1, 2 * a - a / 2 + 1);
    b.b3 = run(base + 2 * (2 * a + 1) - a / 2, a / 2 - 1);
    return b;
}

BlockTriple f2_blocks_mod1(i64 a, i64 i) {
    check_params(a, 1);
    if (a % 4 != 1) fail(errc::invalid_parameter, "these blocks require a ≡ 1 (mod 4)");
    if (i < 0) fail(errc::invalid_parameter, "block index must be >= 0");
    const i64 base =
        narrow_base(static_cast<__int128>(16 * a + 17) * a + 3 +
                        static_cast<__int128>(4 * a + 1) * i,
                    4 * a + 1);
    BlockTriple b;
    b.b1 = run(base, 2 * a + 1);
    b.b2 = run(base + 2 * a + 1, (3 * a + 1) / 2);
    b.b3 = run(base + (7 * a + 3) / 2, (a - 1) / 2);
    return b;
}

FamilyCase classify_f1(i64 a, i64 n) {
    check_params(a, n);
    if (n == a || n == a + 1 || n == 2 * a + 1)
        fail(errc::degenerate_input, "n collides with a fixed element of {a, a+1, 2a+1}");

    FamilyCase fc;
    fc.family = Family::F1;
    fc.a = a;
    fc.n = n;

    const i64 period = 3 * a + 1;

    // n = a + (3a+1)j + l with 0 <= j <= a-1, 0 <= l <= a
    if (n >= a) {
        i64 j = (n - a) / period, l = (n - a) % period;
        if (j <= a - 1 && l <= a) {
            fc.label = CaseLabel::F1CaseIJ;
            fc.j = j;
            fc.l = l;
            fc.bound = Rational(a, period);
            fc.exact = true;
            return fc;
        }
    }

    const i64 start = (3 * a + 2) * a;
    if (at_least(n, static_cast<__int128>(3 * a + 2) * a)) {
        i64 off = n - start;
        i64 i = off / period, p = off % period;
        fc.i = i;
        if (p <= a) {
            fc.label = CaseLabel::F1N1;
            fc.l = p;
            fc.bound = Rational(a, period);
            fc.exact = true;
        } else if (p <= 2 * a + 1 + a / 3) {
            fc.label = CaseLabel::F1N2;
            fc.l = p - (a + 1);
            fc.bound = Rational(a * (a + 1 + i), a + n);
        } else {
            i64 l = p - (2 * (a + 1) + a / 3);
            fc.label = CaseLabel::F1N3;
            fc.l = l;
            fc.bound = Rational(a * (a + 1 + i) + a / 3 + 1 + l, 2 * a + 1 + n);
        }
        return fc;
    }

    fc.label = CaseLabel::Uncovered;
    return fc;
}

FamilyCase classify_f2(i64 a, i64 n) {
    check_params(a, n);
    if (n == a || n == a + 1 || n == 2 * a + 1 || n == 3 * a + 1)
        fail(errc::degenerate_input, "n collides with a fixed element of {a, a+1, 2a+1, 3a+1}");

    FamilyCase fc;
    fc.family = Family::F2;
    fc.a = a;
    fc.n = n;
    const i64 period = 4 * a + 1;

    switch (a % 4) {
        case 0: {
            const __int128 start128 = static_cast<__int128>(8 * a + 3) * a;
            if (at_least(n, start128)) {
                const i64 start = (8 * a + 3) * a;
                i64 off = n - start;
                i64 i = off / period, p = off % period;
                fc.i = i;
                if (p <= 2 * a) {
                    fc.label = CaseLabel::F2O1;
                    fc.l = p;
                    fc.bound = Rational(a, period);
                } else if (p <= 4 * a + 1 - a / 2) {
                    fc.label = CaseLabel::F2O2;
                    fc.l = p - (2 * a + 1);
                    fc.bound = Rational(a * (2 * a + 1 + i), a + n);
                } else {
                    i64 l = p - (2 * (2 * a + 1) - a / 2);
                    fc.label = CaseLabel::F2O3;
                    fc.l = l;
                    fc.bound = Rational(a * (2 * a + 1 + i) + a / 2 + 1 + l, 3 * a + 1 + n);
                }
                return fc;
            }
            // n = a + (4a+1)j + l, 0 <= j <= 2a, 0 <= l <= 2a
            if (n >= a) {
                i64 j = (n - a) / period, l = (n - a) % period;
                if (j <= 2 * a && l <= 2 * a) {
                    fc.label = CaseLabel::F2RemarkX;
                    fc.j = j;
                    fc.l = l;
                    fc.bound = Rational(a, period);
                    return fc;
                }
            }
            break;
        }
        case 1: {
            const __int128 start128 = static_cast<__int128>(16 * a + 17) * a + 3;
            if (at_least(n, start128)) {
                const i64 start = (16 * a + 17) * a + 3;
                i64 off = n - start;
                i64 i = off / period, p = off % period;
                fc.i = i;
                if (p <= 2 * a) {
                    fc.label = CaseLabel::F2P1;
                    fc.l = p;
                    fc.bound = Rational(a, period);
                } else if (p <= (7 * a + 1) / 2) {
                    fc.label = CaseLabel::F2P2;
                    fc.l = p - (2 * a + 1);
                    fc.bound = Rational(4 * a * (a + 1) + a * i, a + n);
                } else {
                    i64 l = p - (7 * a + 3) / 2;
                    fc.label = CaseLabel::F2P3;
                    fc.l = l;
                    fc.bound = Rational(4 * a * (a + 1) + (a + 1) / 2 + a * i + l, 3 * a + n + 1);
                }
                return fc;
            }
            // n = a + (4a+1)j + l, 0 <= j <= 4a+3, 0 <= l <= 2a
            if (n >= a) {
                i64 j = (n - a) / period, l = (n - a) % period;
                if (j <= 4 * a + 3 && l <= 2 * a) {
                    fc.label = CaseLabel::F2RemarkX;
                    fc.j = j;
                    fc.l = l;
                    fc.bound = Rational(a, period);
                    return fc;
                }
            }
            break;
        }
        case 2: {
            fc.label = CaseLabel::F2Mod4;
            fc.bound = n % 4 != 0 ? Rational(1, 4) : Rational(n, 4 * (2 * a + n + 1));
            return fc;
        }
        case 3: {
            // n in S_i: n ≡ i (mod 4), (n-i)/4 = q*(5a+2) + r with r in one of
            // five closed intervals whose endpoints have denominator 20.
            const i64 m = 5 * a + 2;
            i64 i = n % 4;
            i64 v = (n - i) / 4;
            i64 q = v / m, r = v % m;
            for (i64 t = 0; t <= 4; ++t) {
                i64 lo20 = (4 * t + i + 1) * m - (5 * i + 1);
                i64 hi20 = (4 * t + 3 + i) * m + 1 - 5 * i;
                if (20 * r >= lo20 && 20 * r <= hi20) {
                    fc.label = CaseLabel::F2S;
                    fc.i = i;
                    fc.q = q;
                    fc.r = r;
                    fc.t = t;
                    fc.bound = Rational(5 * a + 1, 4 * m);
                    return fc;
                }
            }
            break;
        }
    }

    fc.label = CaseLabel::Uncovered;
    return fc;
}

DifferenceSet build_set(const FamilyCase& fc) {
    check_params(fc.a, fc.n);
    std::vector<i64> raw{fc.a, fc.a + 1, 2 * fc.a + 1, fc.n};
    if (fc.family == Family::F2) raw.push_back(3 * fc.a + 1);
    return DifferenceSet::normalize(std::move(raw));
}

PartitionReport partition_check(Observation obs, i64 a, i64 horizon) {
    check_params(a, 1);
    if (horizon < 1 || horizon > kMaxParam)
        fail(errc::invalid_input, "horizon must be in [1, " + std::to_string(kMaxParam) + "]");

    PartitionReport rep;
    rep.obs = obs;
    rep.a = a;
    rep.horizon = horizon;
    BlockTriple (*gen)(i64, i64) = nullptr;
    switch (obs) {
        case Observation::Obs21:
            gen = f1_blocks;
            rep.start = narrow_base(static_cast<__int128>(3 * a + 2) * a, 3 * a + 1);
            rep.period = 3 * a + 1;
            rep.excluded_claim = (3 * a + 2) * a - 1;
            break;
        case Observation::Obs31:
            if (a % 4 != 0) fail(errc::invalid_parameter, "block id 3.1 requires a ≡ 0 (mod 4)");
            gen = f2_blocks_mod0;
            rep.start = narrow_base(static_cast<__int128>(8 * a + 3) * a, 4 * a + 1);
            rep.period = 4 * a + 1;
            rep.excluded_claim = (8 * a + 3) * a - 1;
            break;
        case Observation::Obs33:
            if (a % 4 != 1) fail(errc::invalid_parameter, "block id 3.3 requires a ≡ 1 (mod 4)");
            gen = f2_blocks_mod1;
            rep.start = narrow_base(static_cast<__int128>(16 * a + 17) * a + 3, 4 * a + 1);
            rep.period = 4 * a + 1;
            rep.excluded_claim = (16 * a + 17) * a + 2;
            break;
    }
    // The stated union claim names a single missing integer; the blocks in
    // fact begin at `start`, so everything in [0, start-1] is outside them.
    // Record whether the named point is exactly start-1 (it is, for all three
    // block systems) rather than asserting the literal claim.
    rep.excluded_below_start = rep.excluded_claim == rep.start - 1;

    rep.tiles = true;
    if (rep.start > horizon) {
        rep.covered_to = rep.start - 1;
        rep.tiles = false;
        rep.failure = "horizon below the first block";
        return rep;
    }
    i64 expected = rep.start;
    for (i64 i = 0;; ++i) {
        BlockTriple b = gen(a, i);
        for (const auto* blk : {&b.b1, &b.b2, &b.b3}) {
            for (i64 e : *blk) {
                if (e > horizon) {
                    rep.covered_to = expected - 1;
                    return rep;
                }
                if (e != expected) {
                    rep.tiles = false;
                    rep.failure = "expected " + std::to_string(expected) + ", block gives " +
                                  std::to_string(e);
                    rep.covered_to = expected - 1;
                    return rep;
                }
                ++expected;
            }
        }
        if (expected > horizon) {
            rep.covered_to = expected - 1;
            return rep;
        }
    }
}

} // namespace motzkin
