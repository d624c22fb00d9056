#include <doctest.h>

#include "scslab/lemmas.hpp"
#include "scslab/modarith.hpp"

using namespace scslab;

namespace {

// factor-and-check oracle for squarefull counting
bool squarefull_naive(i64 n) {
    for (auto [p, e] : factorize(n).factors)
        if (e < 2) return false;
    return true;
}

}  // namespace

TEST_CASE("gcd averages") {
    CHECK(gcd_average(10, 6) == 23);
    for (i64 X : {1, 7, 100, 5000}) CHECK(gcd_average(X, 1) == X);

    for (i64 X : {10, 100, 1000, 10000}) {
        for (i64 m : {1, 2, 6, 30, 210, 360, 720, 997}) {
            i64 v = gcd_average(X, m);
            CHECK(v <= X * divisor_count(m));
            CHECK(v >= X);
        }
    }
}

TEST_CASE("squarefull counts") {
    CHECK(squarefull_count(1) == 1);
    CHECK(squarefull_count(100) == 14);

    i64 count = 0;
    for (i64 n = 1; n <= 2000; ++n) {
        if (squarefull_naive(n)) ++count;
        CHECK(squarefull_count(n) == count);
    }

    i64 v6 = squarefull_count(1000000);
    double r6 = static_cast<double>(v6) / 1000.0;
    CHECK(r6 >= 1.9);
    CHECK(r6 <= 2.4);

    for (i64 X : {10000LL, 1000000LL, 100000000LL}) {
        double r = static_cast<double>(squarefull_count(X)) / std::sqrt(static_cast<double>(X));
        CHECK(r >= 1.5);
        CHECK(r <= 2.5);
    }
}

TEST_CASE("poisson gaussian check") {
    auto c1 = poisson_gaussian_check(1.0);
    CHECK(c1.lhs == doctest::Approx(1.0864348).epsilon(1e-6));
    CHECK(c1.lhs == doctest::Approx(c1.rhs).epsilon(1e-14));

    for (double sigma : {0.25, 0.5, 1.0, 2.0, 4.0, 0.1, 10.0}) {
        auto c = poisson_gaussian_check(sigma);
        CHECK(c.diff <= 1e-12);
    }

    // dilation duality: lhs(2) = 2 * rhs(1/2)
    auto a = poisson_gaussian_check(2.0);
    auto b = poisson_gaussian_check(0.5);
    CHECK(a.lhs == doctest::Approx(2.0 * b.rhs).epsilon(1e-13));

    CHECK_THROWS_AS(poisson_gaussian_check(0.05), std::invalid_argument);
    CHECK_THROWS_AS(poisson_gaussian_check(20.0), std::invalid_argument);
}
