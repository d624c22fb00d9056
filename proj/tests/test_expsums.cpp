#include <doctest.h>

#include "scslab/expsums.hpp"
#include "scslab/verify.hpp"

using namespace scslab;

namespace {

// Mobius-formula oracle: c_q(n) = sum over d | gcd(q,n) of d * mu(q/d).
i64 ramanujan_mobius(i64 q, i64 n) {
    i64 g = std::gcd(q, mod_reduce(n, q));
    if (g == 0) g = q;
    i64 acc = 0;
    for (i64 d : divisors(g))
        if (q % d == 0) acc += d * mobius(q / d);
    return acc;
}

}  // namespace

TEST_CASE("kloosterman pinned values") {
    CHECK(*kloosterman(1, 1, 1).as_integer == 1);
    CHECK(*kloosterman(1, 1, 3).as_integer == -1);
    CHECK(*kloosterman(2, 1, 3).as_integer == 2);

    // S(1,1;5) = (3 - sqrt 5)/2, irrational, so no certificate
    auto k5 = kloosterman(1, 1, 5);
    CHECK(!k5.as_integer.has_value());
    CHECK(k5.value.real() == doctest::Approx(0.381966011250105).epsilon(1e-12));

    // S(0,n;q) collapses to the Ramanujan sum
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        i64 q = rng.between(1, 200), n = rng.between(-300, 300);
        CHECK(std::abs(kloosterman(0, n, q).value - ramanujan_sum(q, n).value) < 1e-9);
    }
}

TEST_CASE("kloosterman rows match single evaluations") {
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
        i64 q = rng.between(1, 80), b = rng.below(std::max<i64>(q, 1));
        auto row = kloosterman_row(b, q);
        for (i64 a : {i64{0}, i64{1} % q, rng.below(q)})
            CHECK(row[static_cast<size_t>(a)] ==
                  doctest::Approx(kloosterman(a, b, q).value.real()).epsilon(1e-10));
    }
}

TEST_CASE("kloosterman symmetry, reality, weil bound up to 100") {
    auto rep = verify::weil(100);
    CHECK(rep.pass);
    CHECK(rep.max_ratio <= 1.0);
}

TEST_CASE("weil certificates") {
    auto c = weil_certify(1, 1, 3);
    CHECK(c.ok);
    CHECK(c.bound == doctest::Approx(2.0 * std::sqrt(3.0)));

    for (i64 q : {1, 2, 6, 12, 30, 97}) {
        auto z = weil_certify(0, 0, q);
        CHECK(z.ok);
        CHECK(*z.value.as_integer == euler_phi(q));
    }
}

TEST_CASE("ramanujan sums against the Mobius formula") {
    CHECK(*ramanujan_sum(6, 0).as_integer == 2);
    CHECK(*ramanujan_sum(3, 1).as_integer == -1);
    CHECK(*ramanujan_sum(4, 2).as_integer == -2);

    for (i64 q = 1; q <= 300; ++q) {
        RootTable roots(q);
        for (i64 n = 0; n < q; ++n) {
            auto v = ramanujan_sum(q, n);
            REQUIRE(v.as_integer.has_value());
            if (*v.as_integer != ramanujan_mobius(q, n))
                FAIL("ramanujan mismatch at q=", q, " n=", n);
        }
    }
}

TEST_CASE("ramanujan prime powers") {
    for (i64 p : {2, 3, 5, 7}) {
        for (int gamma = 1; gamma <= 4; ++gamma) {
            i64 pg = 1;
            for (int i = 0; i < gamma; ++i) pg *= p;
            if (pg > 700) continue;
            for (i64 n = 0; n < pg; ++n)
                CHECK(ramanujan_prime_power(p, gamma, n) == *ramanujan_sum(pg, n).as_integer);
        }
    }
}

TEST_CASE("twisted multiplicativity") {
    CHECK(twisted_multiplicativity_check(1, 1, 3, 4));
    CHECK(twisted_multiplicativity_check(5, 7, 9, 1));
    CHECK_THROWS_AS(twisted_multiplicativity_check(1, 1, 2, 4), NonCoprimeModuli);

    auto rep = verify::mult_b31(40, 1, 3);
    CHECK(rep.pass);
}

TEST_CASE("scaling identity") {
    CHECK(scaling_identity_check(1, 1, 1, 9));
    CHECK(scaling_identity_check(1, 1, 2, 5));
    CHECK_THROWS_AS(scaling_identity_check(1, 1, 2, 4), NonCoprimeScale);

    auto rep = verify::scale_b32(40, 2, 4);
    CHECK(rep.pass);
}
