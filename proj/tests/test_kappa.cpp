#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <numeric>

#include "motzkin/kappa.hpp"

using namespace motzkin;

static DifferenceSet set_of(std::vector<i64> v) {
    return DifferenceSet::normalize(std::move(v));
}

static errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code;
    }
    FAIL("expected an Error");
    return errc::internal;
}

TEST_CASE("witness_value on fixed pairs") {
    CHECK(witness_value(set_of({2, 3, 5, 16}), 1, 7) == Rational(2, 7));
    CHECK(witness_value(set_of({2, 3, 5, 19}), 3, 21) == Rational(2, 7));
    CHECK(witness_value(set_of({2, 3, 5, 22}), 4, 27) == Rational(7, 27));
    CHECK(witness_value(set_of({2, 3, 5, 20}), 3, 22) == Rational(3, 11));
    CHECK(witness_value(set_of({1, 2, 3, 4, 39}), 8, 40) == Rational(1, 5));
    CHECK(witness_value(set_of({2, 3, 5, 7, 16}), 5, 21) == Rational(4, 21));
    // non-coprime pairs are legal here and scale cleanly
    CHECK(witness_value(set_of({1, 3}), 2, 4) == Rational(1, 2));
    // an element divisible by the modulus kills the witness
    CHECK(witness_value(set_of({2, 3, 6}), 1, 6) == Rational(0, 1));
    CHECK(code_of([] { witness_value(set_of({1, 2}), 1, 1); }) == errc::invalid_modulus);
    CHECK(code_of([] { witness_value(set_of({1, 2}), 0, 5); }) == errc::invalid_input);
}

TEST_CASE("kappa on tiny sets") {
    auto k1 = kappa_exact(set_of({1}));
    CHECK(k1.value == Rational(1, 2));
    CHECK(k1.witness_c == 1);
    CHECK(k1.witness_m == 2);
    CHECK(k1.achieved_d == 1);

    // scaling invariance: {7} normalizes to {1}
    CHECK(kappa_exact(set_of({7})).value == Rational(1, 2));

    auto k12 = kappa_exact(set_of({1, 2}));
    CHECK(k12.value == Rational(1, 3));
    CHECK(k12.witness_c == 1);
    CHECK(k12.witness_m == 3);
}

TEST_CASE("kappa witness is reduced to a coprime pair") {
    // only pair sum is 4; the maximizer is (2, 4), reported as (1, 2)
    auto k = kappa_exact(set_of({1, 3}));
    CHECK(k.value == Rational(1, 2));
    CHECK(k.witness_c == 1);
    CHECK(k.witness_m == 2);
    CHECK(k.achieved_d == 1);

    // same shape one size up: (4, 8) -> (1, 2)
    auto k2 = kappa_exact(set_of({3, 5}));
    CHECK(k2.value == Rational(1, 2));
    CHECK(k2.witness_c == 1);
    CHECK(k2.witness_m == 2);
}

TEST_CASE("kappa on published four- and five-element sets") {
    auto k = kappa_exact(set_of({2, 3, 5, 16}));
    CHECK(k.value == Rational(2, 7));
    CHECK(k.witness_c == 1);
    CHECK(k.witness_m == 7);
    CHECK(k.achieved_d == 2);

    auto k2 = kappa_exact(set_of({2, 3, 4, 5}));
    CHECK(k2.value == Rational(2, 7));
    CHECK(k2.witness_c == 1);
    CHECK(k2.witness_m == 7);

    auto k3 = kappa_exact(set_of({2, 3, 5, 22}));
    CHECK(k3.value == Rational(7, 27));
    CHECK(k3.witness_c == 4);
    CHECK(k3.witness_m == 27);
    CHECK(k3.achieved_d == 7);

    auto k4 = kappa_exact(set_of({4, 5, 9, 13, 140}));
    CHECK(k4.value == Rational(4, 17));
    CHECK(k4.witness_c == 1);
    CHECK(k4.witness_m == 17);

    // kappa may exceed the closed-form case bound (here 4/21 for a=2, n=16)
    auto k5 = kappa_exact(set_of({2, 3, 5, 7, 16}));
    CHECK(k5.value == Rational(2, 9));
    CHECK(k5.witness_c == 1);
    CHECK(k5.witness_m == 9);
}

TEST_CASE("pair-sum scan agrees with the full modulus sweep") {
    std::vector<std::vector<i64>> sets = {
        {1},       {1, 2},       {2, 3},        {1, 4, 5},      {2, 3, 5},
        {3, 5, 8}, {2, 3, 5, 16},{2, 3, 5, 22}, {2, 3, 5, 7, 16},
        {4, 7, 9}, {5, 6, 13},   {1, 10},       {9, 10},        {2, 7, 11, 30},
    };
    for (const auto& raw : sets) {
        auto M = set_of(raw);
        auto fast = kappa_exact(M);
        auto slow = kappa_sweep_oracle(M, 2 * M.max_element());
        CAPTURE(M.str());
        CHECK(fast.value == slow.value);
        // the sweep visits every modulus, so its witness can only tie or come
        // from a smaller modulus than the pair-sum scan's
        CHECK(slow.witness_m <= fast.witness_m);
        CHECK(witness_value(M, fast.witness_c, fast.witness_m) == fast.value);
        CHECK(witness_value(M, slow.witness_c, slow.witness_m) == slow.value);
    }
}

TEST_CASE("kappa witness pairs reproduce their value and stay canonical") {
    std::vector<std::vector<i64>> sets = {
        {2, 3, 5, 16}, {2, 3, 5, 22}, {4, 5, 9, 13, 140}, {9, 10}, {1, 4, 5}};
    for (const auto& raw : sets) {
        auto M = set_of(raw);
        auto k = kappa_exact(M);
        CAPTURE(M.str());
        CHECK(std::gcd(k.witness_c, k.witness_m) == 1);
        CHECK(k.witness_c >= 1);
        CHECK(2 * k.witness_c <= k.witness_m);
        CHECK(Rational(k.achieved_d, k.witness_m) == k.value);
        CHECK(witness_value(M, k.witness_c, k.witness_m) == k.value);
    }
}

TEST_CASE("witness_mset builds a valid periodic set of the promised density") {
    auto M = set_of({2, 3, 5, 16});
    auto p = witness_mset(M, 1, 7);
    CHECK(p.period == 7);
    CHECK(p.pattern_string() == "1100000");
    CHECK(p.density == Rational(2, 7));
    CHECK(validate_periodic_mset(p, M));

    auto M2 = set_of({2, 3, 5, 7, 16});
    auto p2 = witness_mset(M2, 5, 21);
    CHECK(p2.period == 21);
    CHECK(p2.selected() == std::vector<i64>{0, 9, 13, 17});
    CHECK(p2.density == Rational(4, 21));
    CHECK(validate_periodic_mset(p2, M2));

    // non-coprime pairs break the precondition; d = 0 means no set exists
    CHECK(code_of([&] { witness_mset(set_of({1, 3}), 2, 4); }) == errc::invalid_input);
    CHECK(code_of([&] { witness_mset(set_of({2, 3, 6}), 1, 6); }) == errc::no_witness);
}

TEST_CASE("kappa is invariant under scaling") {
    for (i64 g : {2, 3, 10}) {
        auto base = set_of({2, 3, 5, 16});
        auto scaled = set_of({2 * g, 3 * g, 5 * g, 16 * g});
        CHECK(kappa_exact(base).value == kappa_exact(scaled).value);
    }
}
