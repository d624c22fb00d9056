#include <doctest.h>

#include "scslab/modarith.hpp"

using namespace scslab;

TEST_CASE("factorize basics") {
    CHECK(factorize(1).factors.empty());

    auto f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<i64, int>{2, 2});
    CHECK(f12.factors[1] == std::pair<i64, int>{3, 1});

    auto f = factorize(720720);
    std::vector<std::pair<i64, int>> want{{2, 4}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}};
    CHECK(f.factors == want);

    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize product round-trip") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        i64 n = rng.between(1, 1000000000000LL);
        auto f = factorize(n);
        i64 prod = 1;
        for (auto [p, e] : f.factors) {
            CHECK(is_prime(p));
            for (int i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
        for (size_t i = 1; i < f.factors.size(); ++i)
            CHECK(f.factors[i - 1].first < f.factors[i].first);
    }
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(1, 7) == 1);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK_THROWS_AS(mod_inverse(2, 4), NotInvertible);

    // a * inv(a) == 1 mod q for every unit, all q <= 1000
    for (i64 q = 1; q <= 1000; ++q) {
        for (i64 a = 1; a < std::max<i64>(q, 2); ++a) {
            if (std::gcd(a, q) != 1) continue;
            i64 inv = mod_inverse(a, q);
            CHECK(mod_reduce(a * inv, q) == 1 % q);
        }
    }
}

TEST_CASE("crt split and recombine") {
    CHECK(crt_split(5, 3, 4) == std::pair<i64, i64>{2, 1});
    CHECK(crt_split(0, 7, 9) == std::pair<i64, i64>{0, 0});
    CHECK(crt_split(7, 3, 5) == std::pair<i64, i64>{1, 2});
    CHECK(crt_recombine(1, 2, 3, 5) == 7);
    CHECK_THROWS_AS(crt_split(1, 6, 9), NonCoprimeModuli);

    // identity on [0, q1*q2) for all coprime q1, q2 <= 100
    for (i64 q1 = 1; q1 <= 100; ++q1) {
        for (i64 q2 = q1; q2 <= 100; ++q2) {
            if (std::gcd(q1, q2) != 1) continue;
            for (i64 a = 0; a < q1 * q2; ++a) {
                auto [a1, a2] = crt_split(a, q1, q2);
                if (crt_recombine(a1, a2, q1, q2) != a) {
                    FAIL("crt round-trip failed at a=", a, " q1=", q1, " q2=", q2);
                }
            }
        }
    }
}

TEST_CASE("additive character") {
    CHECK(std::abs(additive_char(0, 5) - cplx{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(additive_char(1, 2) - cplx{-1.0, 0.0}) < 1e-12);
    CHECK(std::abs(additive_char(1, 3) - cplx{-0.5, 0.8660254}) < 1e-6);

    for (i64 q = 1; q <= 200; ++q) {
        RootTable roots(q);
        for (i64 j = 0; j < q; ++j)
            CHECK(std::abs(std::abs(roots(j)) - 1.0) < 1e-12);
    }

    // e(x/q) e(y/q) = e((x+y)/q), sampled
    Rng rng(3);
    for (int t = 0; t < 500; ++t) {
        i64 q = rng.between(1, 1000);
        i64 x = rng.between(-5000, 5000), y = rng.between(-5000, 5000);
        CHECK(std::abs(additive_char(x, q) * additive_char(y, q) - additive_char(x + y, q)) <
              1e-10);
    }
}

TEST_CASE("character orthogonality") {
    CHECK(*char_orthogonality_check(0, 7).as_integer == 7);
    CHECK(*char_orthogonality_check(3, 7).as_integer == 0);
    CHECK(*char_orthogonality_check(14, 7).as_integer == 7);

    // matches q * [q | n] for all n in [0, 2q), q <= 500
    for (i64 q = 1; q <= 500; ++q) {
        RootTable roots(q);
        for (i64 n = 0; n < 2 * q; ++n) {
            auto v = char_orthogonality_check(n, roots);
            REQUIRE(v.as_integer.has_value());
            i64 expect = (n % q == 0) ? q : 0;
            if (*v.as_integer != expect) FAIL("orthogonality failed at n=", n, " q=", q);
        }
    }
}

TEST_CASE("multiplicative helpers") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(720720) == 138240);
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(divisor_count(24) == 8);
    CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
}
