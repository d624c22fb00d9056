// modarith.hpp
//
// Exact modular arithmetic: factorization (trial division + Brent-rho with a
// product check), modular inverses, CRT split/recombine, unit enumeration,
// and the additive character e(x/q) backed by per-modulus root tables.

#pragma once

#include <numbers>
#include <numeric>

#include "scslab/common.hpp"

namespace scslab {

// ---------------------------------------------------------------------------
// Primality and factorization
// ---------------------------------------------------------------------------

namespace detail {

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 powmod_u64(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = static_cast<u64>(n - 1);
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = detail::powmod_u64(a, d, static_cast<u64>(n));
        if (x == 1 || x == static_cast<u64>(n) - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod_u64(x, x, static_cast<u64>(n));
            if (x == static_cast<u64>(n) - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

// Brent's cycle variant of Pollard rho; only reached for composites with no
// factor below the trial-division bound.
inline i64 pollard_rho(i64 n) {
    if (n % 2 == 0) return 2;
    u64 un = static_cast<u64>(n);
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        auto f = [&](u64 v) { return (mulmod_u64(v, v, un) + c) % un; };
        while (d == 1) {
            y = x;
            for (int i = 0; i < lam; ++i) x = f(x);
            int k = 0;
            while (k < lam && d == 1) {
                int lim = std::min(128, lam - k);
                u64 xs = x;
                for (int i = 0; i < lim; ++i) {
                    x = f(x);
                    q = mulmod_u64(q, x > y ? x - y : y - x, un);
                }
                d = std::gcd(q, un);
                if (d == un) {
                    // backtrack one step at a time
                    x = xs;
                    d = 1;
                    for (int i = 0; i < lim && d == 1; ++i) {
                        x = f(x);
                        d = std::gcd(x > y ? x - y : y - x, un);
                    }
                    if (d == 1 || d == un) break;
                }
                k += lim;
            }
            lam *= 2;
        }
        if (d != un && d != 1) return static_cast<i64>(d);
    }
}

}  // namespace detail

struct ModulusFactorization {
    i64 q = 1;
    std::vector<std::pair<i64, int>> factors;  // (prime, exponent), primes increasing
};

// q >= 1; q = 1 yields an empty factor list. Result is verified by
// multiplying back.
inline ModulusFactorization factorize(i64 q) {
    if (q < 1) throw std::invalid_argument("factorize: q must be >= 1");
    ModulusFactorization out;
    out.q = q;
    i64 n = q;
    auto push = [&](i64 p, int e) { out.factors.emplace_back(p, e); };
    for (i64 p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            push(p, e);
        }
    }
    if (n > 1) {
        if (is_prime(n)) {
            push(n, 1);
        } else {
            // two large prime factors at most for n <= 1e12 after trial
            // division, but recurse to stay safe for any 64-bit input
            std::vector<i64> stack{n};
            std::vector<i64> primes;
            while (!stack.empty()) {
                i64 m = stack.back();
                stack.pop_back();
                if (is_prime(m)) {
                    primes.push_back(m);
                    continue;
                }
                i64 d = detail::pollard_rho(m);
                stack.push_back(d);
                stack.push_back(m / d);
            }
            std::sort(primes.begin(), primes.end());
            for (size_t i = 0; i < primes.size();) {
                size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                push(primes[i], static_cast<int>(j - i));
                i = j;
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end());
    i64 check = 1;
    for (auto [p, e] : out.factors)
        for (int i = 0; i < e; ++i) check *= p;
    if (check != q) throw std::logic_error("factorize: product check failed");
    return out;
}

inline i64 euler_phi(i64 q) {
    auto f = factorize(q);
    i64 phi = 1;
    for (auto [p, e] : f.factors) {
        i64 pe = 1;
        for (int i = 0; i + 1 < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

inline int mobius(i64 n) {
    auto f = factorize(n);
    for (auto [p, e] : f.factors)
        if (e > 1) return 0;
    return (f.factors.size() % 2 == 0) ? 1 : -1;
}

inline i64 divisor_count(i64 n) {
    auto f = factorize(n);
    i64 d = 1;
    for (auto [p, e] : f.factors) d *= (e + 1);
    return d;
}

inline std::vector<i64> divisors(i64 n) {
    auto f = factorize(n);
    std::vector<i64> out{1};
    for (auto [p, e] : f.factors) {
        size_t sz = out.size();
        i64 pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pe);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Inverses and CRT
// ---------------------------------------------------------------------------

// a * result == 1 (mod q), result in [0, q). Throws NotInvertible when
// gcd(a, q) != 1.
inline i64 mod_inverse(i64 a, i64 q) {
    if (q < 1) throw std::invalid_argument("mod_inverse: q must be >= 1");
    if (q == 1) return 0;
    i64 r0 = q, r1 = mod_reduce(a, q);
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 k = r0 / r1;
        i64 r2 = r0 - k * r1;
        r0 = r1;
        r1 = r2;
        i64 t2 = t0 - k * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1)
        throw NotInvertible("mod_inverse: gcd(" + std::to_string(a) + ", " + std::to_string(q) +
                            ") = " + std::to_string(r0));
    return mod_reduce(t0, q);
}

// inv[x] = inverse of x mod q for units, -1 otherwise. Covers q = 1 with
// inv[0] = 0 (the single residue is its own inverse).
inline std::vector<i64> unit_inverse_table(i64 q) {
    std::vector<i64> inv(static_cast<size_t>(q), -1);
    if (q == 1) {
        inv[0] = 0;
        return inv;
    }
    inv[1] = 1;
    for (i64 x = 2; x < q; ++x) {
        if (inv[x] != -1 || std::gcd(x, q) != 1) continue;
        i64 ix = mod_inverse(x, q);
        inv[x] = ix;
        inv[ix] = x;
    }
    return inv;
}

inline std::vector<i64> units_mod(i64 q) {
    std::vector<i64> out;
    if (q == 1) {
        out.push_back(0);
        return out;
    }
    for (i64 x = 1; x < q; ++x)
        if (std::gcd(x, q) == 1) out.push_back(x);
    return out;
}

// Residues of a modulo the coprime pair (q1, q2).
inline std::pair<i64, i64> crt_split(i64 a, i64 q1, i64 q2) {
    if (q1 < 1 || q2 < 1) throw std::invalid_argument("crt_split: moduli must be >= 1");
    if (std::gcd(q1, q2) != 1)
        throw NonCoprimeModuli("crt_split: gcd(" + std::to_string(q1) + ", " + std::to_string(q2) +
                               ") != 1");
    return {mod_reduce(a, q1), mod_reduce(a, q2)};
}

// a = a1*q2*inv(q2 mod q1) + a2*q1*inv(q1 mod q2) mod q1*q2.
inline i64 crt_recombine(i64 a1, i64 a2, i64 q1, i64 q2) {
    if (std::gcd(q1, q2) != 1)
        throw NonCoprimeModuli("crt_recombine: moduli not coprime");
    i64 q = q1 * q2;
    if (q == 1) return 0;
    i64 t1 = (q2 % q1 == 0) ? 0 : mod_inverse(q2, q1);
    i64 t2 = (q1 % q2 == 0) ? 0 : mod_inverse(q1, q2);
    i128 acc = static_cast<i128>(mod_reduce(a1, q1)) * q2 % q * t1 % q;
    acc += static_cast<i128>(mod_reduce(a2, q2)) * q1 % q * t2 % q;
    return static_cast<i64>(acc % q);
}

// ---------------------------------------------------------------------------
// Additive characters
// ---------------------------------------------------------------------------

// Precomputed q-th roots of unity; the heavy scans index this table instead
// of calling trig functions.
class RootTable {
  public:
    explicit RootTable(i64 q) : q_(q), roots_(static_cast<size_t>(q)) {
        if (q < 1) throw std::invalid_argument("RootTable: q must be >= 1");
        const double step = 2.0 * std::numbers::pi / static_cast<double>(q);
        for (i64 j = 0; j < q; ++j) roots_[static_cast<size_t>(j)] = std::polar(1.0, step * static_cast<double>(j));
    }

    i64 modulus() const { return q_; }
    // idx need not be reduced
    cplx operator()(i64 idx) const { return roots_[static_cast<size_t>(mod_reduce(idx, q_))]; }
    const cplx* data() const { return roots_.data(); }

  private:
    i64 q_;
    std::vector<cplx> roots_;
};

// e(x/q) = exp(2*pi*i*(x mod q)/q)
inline cplx additive_char(i64 x, i64 q) {
    if (q < 1) throw std::invalid_argument("additive_char: q must be >= 1");
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod_reduce(x, q)) /
                               static_cast<double>(q));
}

// sum over all residues alpha mod q of e(alpha*n/q); equals q when q | n and
// 0 otherwise, certified.
inline ExpSumValue char_orthogonality_check(i64 n, const RootTable& roots) {
    const i64 q = roots.modulus();
    i64 step = mod_reduce(n, q);
    cplx acc = 0.0;
    i64 idx = 0;
    for (i64 a = 0; a < q; ++a) {
        acc += roots.data()[idx];
        idx += step;
        if (idx >= q) idx -= q;
    }
    return ExpSumValue::certify(acc);
}

inline ExpSumValue char_orthogonality_check(i64 n, i64 q) {
    if (q < 1) throw std::invalid_argument("char_orthogonality_check: q must be >= 1");
    return char_orthogonality_check(n, RootTable(q));
}

}  // namespace scslab
