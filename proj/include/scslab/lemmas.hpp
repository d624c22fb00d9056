// lemmas.hpp
//
// Elementary counting sums (gcd averages, squarefull counts) and the
// numerical Poisson-summation check on Gaussians.

#pragma once

#include "scslab/modarith.hpp"

namespace scslab {

// sum over n <= X of gcd(n, m), exact.
inline i64 gcd_average(i64 X, i64 m) {
    if (X < 1 || m < 1) throw std::invalid_argument("gcd_average: arguments must be >= 1");
    i64 acc = 0;
    for (i64 n = 1; n <= X; ++n) acc += std::gcd(n, m);
    return acc;
}

inline i64 isqrt_i64(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// #{n <= X : every prime exponent of n is >= 2}, with 1 counted. Every
// squarefull n is uniquely a^2*b^3 with b squarefree, so the count is
// sum over squarefree b with b^3 <= X of floor(sqrt(X/b^3)): O(X^(1/3)).
inline i64 squarefull_count(i64 X) {
    if (X < 1) throw std::invalid_argument("squarefull_count: X must be >= 1");
    i64 acc = 0;
    for (i64 b = 1; b * b * b <= X; ++b) {
        bool sf = true;
        i64 t = b;
        for (i64 p = 2; p * p <= t && sf; ++p) {
            if (t % p != 0) continue;
            t /= p;
            if (t % p == 0) sf = false;
        }
        if (!sf) continue;
        acc += isqrt_i64(X / (b * b * b));
    }
    return acc;
}

struct PoissonCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double diff = 0.0;
};

// For f(x) = exp(-pi (x/sigma)^2) the dual is sigma * exp(-pi (sigma y)^2);
// both theta series are summed past the point where the tails drop below
// 1e-15.
inline PoissonCheck poisson_gaussian_check(double sigma) {
    if (!(sigma >= 0.1 && sigma <= 10.0))
        throw std::invalid_argument("poisson_gaussian_check: sigma must lie in [0.1, 10]");
    PoissonCheck out;
    auto theta = [](double scale) {
        // sum over all integers n of exp(-pi (n*scale)^2)
        KahanSum acc;
        acc.add(1.0);
        for (i64 n = 1;; ++n) {
            double t = std::exp(-std::numbers::pi * (n * scale) * (n * scale));
            if (t < 1e-18) break;
            acc.add(2.0 * t);
        }
        return acc.value();
    };
    out.lhs = theta(1.0 / sigma);
    out.rhs = sigma * theta(sigma);
    out.diff = std::abs(out.lhs - out.rhs);
    return out;
}

}  // namespace scslab
