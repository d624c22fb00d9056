// charsum.hpp
//
// The central character sums built from pairs of Kloosterman sums.
//
// With P = q/n1 and Q1 = q/m1, the fourfold sum is
//
//   E(q;h,n2) = sum_{k mod q} sum_{l mod P} sum*_{a mod q} sum*_{b mod q}
//               e(inv(a)k/q) S(inv(a),l;P) S(inv(a),m2;Q1)
//             * e(-inv(b)k/q) S(inv(b),l;P) S(inv(b),m2';Q1)
//             * e(kh/q) e(l*n2/P).
//
// Executing the k-sum pins b = a+h (and kills terms where a+h is not a unit);
// executing the l-sum pins the second Kloosterman parameter, leaving the
// reduced form
//
//   E(q;h,n2) = (q^2/n1) sum*_{a: (a+h,q)=1} sum*_{alpha mod P, (inv(alpha)+n2,P)=1}
//               e((alpha*a - inv(inv(alpha)+n2)(a+h))/P) S(a,m2;Q1) S(a+h,m2';Q1).
//
// Both are implemented here together with the zero-frequency sum
//   E1(q) = sum*_{a mod q} S(a,m2;Q1) S(a,m2';Q1),
// its coprime multiplicativity, its closed forms at primes and prime powers,
// the Ramanujan-sum factorization at n2 = 0, the squarefree/squarefull
// modulus splitting, and the prime-modulus triple-Kloosterman sum with its
// square-root-cancellation ratio.

#pragma once

#include "scslab/expsums.hpp"

namespace scslab {

constexpr i64 kCharsumDirectCap = 36;
constexpr i64 kCharsumReducedCap = 2000;

struct CharSumParams {
    i64 q = 1;
    i64 n1 = 1;  // divides q
    i64 m1 = 1;  // divides q
    i64 m2 = 0;  // mod q/m1
    i64 m2p = 0; // mod q/m1
    i64 h = 0;   // mod q
    i64 n2 = 0;  // mod q/n1

    CharSumParams(i64 q_, i64 n1_, i64 m1_, i64 m2_, i64 m2p_, i64 h_, i64 n2_)
        : q(q_), n1(n1_), m1(m1_) {
        if (q < 1) throw std::invalid_argument("CharSumParams: q must be >= 1");
        if (n1 < 1 || q % n1 != 0) throw std::invalid_argument("CharSumParams: n1 must divide q");
        if (m1 < 1 || q % m1 != 0) throw std::invalid_argument("CharSumParams: m1 must divide q");
        m2 = mod_reduce(m2_, q / m1);
        m2p = mod_reduce(m2p_, q / m1);
        h = mod_reduce(h_, q);
        n2 = mod_reduce(n2_, q / n1);
    }
};

// Fourfold definition, evaluated by factoring the unit sums per (k,l):
//   A(k,l)  = sum over units u of e(uk/q) S(u,l;P) S(u,m2;Q1)
//   B(k,l)  = conj(sum over units u of e(uk/q) S(u,l;P) S(u,m2';Q1))
// (inv(a) runs over the units exactly as a does, and the S values are real).
// Cost O(q * P * phi(q)) plus row construction.
inline ExpSumValue charsum_direct(const CharSumParams& p, KloostermanCache& cache,
                                  i64 cap = kCharsumDirectCap) {
    if (p.q > cap)
        throw CapExceeded("charsum_direct: q = " + std::to_string(p.q) + " beyond cap " +
                          std::to_string(cap));
    const i64 q = p.q, P = q / p.n1, Q1 = q / p.m1;
    const RootTable& roots_q = cache.roots(q);
    const RootTable& roots_p = cache.roots(P);
    const auto& rowM2 = cache.row(p.m2, Q1);
    const auto& rowM2p = cache.row(p.m2p, Q1);
    auto units = units_mod(q);

    cplx total = 0.0;
    for (i64 k = 0; k < q; ++k) {
        for (i64 l = 0; l < P; ++l) {
            const auto& rowL = cache.row(l, P);
            cplx A = 0.0, B0 = 0.0;
            for (i64 u : units) {
                cplx ph = roots_q((u * k) % q);
                double sl = rowL[static_cast<size_t>(u % P)];
                A += ph * (sl * rowM2[static_cast<size_t>(u % Q1)]);
                B0 += ph * (sl * rowM2p[static_cast<size_t>(u % Q1)]);
            }
            total += roots_q((k * p.h) % q) * roots_p((l * p.n2) % P) * A * std::conj(B0);
        }
    }
    return ExpSumValue::certify(total);
}

inline ExpSumValue charsum_direct(const CharSumParams& p, i64 cap = kCharsumDirectCap) {
    KloostermanCache cache;
    return charsum_direct(p, cache, cap);
}

// Reduced form; equals charsum_direct wherever both are computable. The a-sum
// is restricted to a with a+h a unit (the k-sum of the fourfold form pins
// b = a+h against a sum over units), and the alpha-sum to alpha with
// inv(alpha)+n2 invertible (the l-sum pins inv(alpha1) = -(inv(alpha)+n2)).
// Cost O(phi(q) * phi(P)) plus row construction.
inline ExpSumValue charsum_reduced(const CharSumParams& p, KloostermanCache& cache,
                                   i64 cap = kCharsumReducedCap) {
    if (p.q > cap)
        throw CapExceeded("charsum_reduced: q = " + std::to_string(p.q) + " beyond cap " +
                          std::to_string(cap));
    const i64 q = p.q, P = q / p.n1, Q1 = q / p.m1;
    const RootTable& roots_p = cache.roots(P);
    const auto& invP = cache.inverses(P);
    const auto& rowM2 = cache.row(p.m2, Q1);
    const auto& rowM2p = cache.row(p.m2p, Q1);

    // alpha-sum phase pairs (alpha, inv(inv(alpha)+n2)), precomputed once
    std::vector<std::pair<i64, i64>> alpha_pairs;
    if (P == 1) {
        alpha_pairs.emplace_back(0, 0);
    } else {
        for (i64 alpha = 1; alpha < P; ++alpha) {
            i64 ainv = invP[static_cast<size_t>(alpha)];
            if (ainv < 0) continue;
            i64 t = (ainv + p.n2) % P;
            i64 tinv = (t == 0) ? -1 : invP[static_cast<size_t>(t)];
            if (tinv < 0) continue;
            alpha_pairs.emplace_back(alpha, tinv);
        }
    }

    KahanSum acc_re, acc_im;
    for (i64 a = (q == 1 ? 0 : 1); a < std::max<i64>(q, 1); ++a) {
        if (q > 1 && std::gcd(a, q) != 1) continue;
        i64 aph = (a + p.h) % q;
        if (q > 1 && std::gcd(aph, q) != 1) continue;
        double s2 = rowM2[static_cast<size_t>(a % Q1)] * rowM2p[static_cast<size_t>(aph % Q1)];
        if (s2 == 0.0) continue;
        cplx inner = 0.0;
        i64 ap = a % P, aphp = aph % P;
        for (auto [alpha, tinv] : alpha_pairs)
            inner += roots_p(alpha * ap - tinv * aphp);
        acc_re.add(s2 * inner.real());
        acc_im.add(s2 * inner.imag());
        if (q == 1) break;
    }
    double scale = static_cast<double>(q) * static_cast<double>(P);
    return ExpSumValue::certify(cplx{scale * acc_re.value(), scale * acc_im.value()});
}

inline ExpSumValue charsum_reduced(const CharSumParams& p, i64 cap = kCharsumReducedCap) {
    KloostermanCache cache;
    return charsum_reduced(p, cache, cap);
}

// Zero-frequency sum E1(q;0,0) = sum*_{a mod q} S(a,m2;q/m1) S(a,m2';q/m1).
// Always a rational integer (the units-average is Galois stable).
inline ExpSumValue charsum_zero(i64 q, i64 m1, i64 m2, i64 m2p, KloostermanCache& cache) {
    if (q < 1) throw std::invalid_argument("charsum_zero: q must be >= 1");
    if (m1 < 1 || q % m1 != 0) throw std::invalid_argument("charsum_zero: m1 must divide q");
    const i64 Q1 = q / m1;
    const auto& rowA = cache.row(m2, Q1);
    const auto& rowB = cache.row(m2p, Q1);
    KahanSum acc;
    if (q == 1) {
        acc.add(1.0);
    } else {
        for (i64 a = 1; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            acc.add(rowA[static_cast<size_t>(a % Q1)] * rowB[static_cast<size_t>(a % Q1)]);
        }
    }
    return ExpSumValue::certify(cplx{acc.value(), 0.0});
}

inline ExpSumValue charsum_zero(i64 q, i64 m1, i64 m2, i64 m2p) {
    KloostermanCache cache;
    return charsum_zero(q, m1, m2, m2p, cache);
}

// E1(q1*q2) = E1(q1) * E1(q2) for coprime q1, q2, with m1 split as
// m1' * m1'' along the factors. Both sides are brute-forced and compared as
// certified integers.
inline bool multiplicativity_check(i64 q1, i64 q2, std::pair<i64, i64> m1_split, i64 m2, i64 m2p,
                                   KloostermanCache& cache) {
    if (q1 < 1 || q2 < 1) throw std::invalid_argument("multiplicativity_check: moduli must be >= 1");
    if (std::gcd(q1, q2) != 1)
        throw NonCoprimeModuli("multiplicativity_check: gcd(q1,q2) != 1");
    auto [m1a, m1b] = m1_split;
    if (m1a < 1 || q1 % m1a != 0) throw std::invalid_argument("multiplicativity_check: m1' must divide q1");
    if (m1b < 1 || q2 % m1b != 0) throw std::invalid_argument("multiplicativity_check: m1'' must divide q2");
    auto whole = charsum_zero(q1 * q2, m1a * m1b, m2, m2p, cache);
    auto left = charsum_zero(q1, m1a, m2, m2p, cache);
    auto right = charsum_zero(q2, m1b, m2, m2p, cache);
    if (whole.as_integer && left.as_integer && right.as_integer)
        return *whole.as_integer == *left.as_integer * *right.as_integer;
    return std::abs(whole.value - left.value * right.value) <=
           1e-6 * (1.0 + std::abs(whole.value));
}

inline bool multiplicativity_check(i64 q1, i64 q2, std::pair<i64, i64> m1_split, i64 m2, i64 m2p) {
    KloostermanCache cache;
    return multiplicativity_check(q1, q2, m1_split, m2, m2p, cache);
}

// Closed form of E1(p;0,0) at a prime p:
//   -1 + p[p|m2] + p[p|m2'] - p^2[p|m2 and p|m2'] - p + p^2[m2 = m2' mod p].
inline i64 zero_closed_form_prime(i64 p, i64 m2, i64 m2p) {
    if (!is_prime(p)) throw NotPrime("zero_closed_form_prime: p = " + std::to_string(p));
    i64 a = mod_reduce(m2, p), b = mod_reduce(m2p, p);
    i64 v = -1 - p;
    if (a == 0) v += p;
    if (b == 0) v += p;
    if (a == 0 && b == 0) v -= p * p;
    if (a == b) v += p * p;
    return v;
}

// Closed form of E1(p^gamma;0,0) for gamma >= 2:
//   p^gamma c_{p^gamma}(m2'-m2) - p^(gamma-1) c_{p^gamma}(m2'-m2) * p * [p|m2].
inline i64 zero_closed_form_prime_power(i64 p, int gamma, i64 m2, i64 m2p) {
    if (!is_prime(p)) throw NotPrime("zero_closed_form_prime_power: p = " + std::to_string(p));
    if (gamma < 2) throw BadExponent("zero_closed_form_prime_power: gamma must be >= 2");
    i64 pg1 = 1;
    for (int i = 0; i + 1 < gamma; ++i) pg1 *= p;
    i64 pg = pg1 * p;
    i64 c = ramanujan_prime_power(p, gamma, m2p - m2);
    i64 v = pg * c;
    if (mod_reduce(m2, p) == 0) v -= pg1 * c * p;
    return v;
}

// Prime-modulus triple-Kloosterman sum
//   F(p) = sum*_{x mod p} e(cx/p) S(x,(x+h)c1;p) S(x,m*c2;p) S(x+h,n*c2;p)
// with all parameters nonzero mod p, plus the ratio |F|/p^2 that the
// square-root-cancellation bound controls.
struct FkResult {
    ExpSumValue value;
    double ratio = 0.0;
};

inline FkResult fk_sum(i64 p, i64 c, i64 c1, i64 c2, i64 m, i64 n, i64 h, KloostermanCache& cache) {
    if (!is_prime(p)) throw NotPrime("fk_sum: p = " + std::to_string(p));
    for (auto [name, v] : {std::pair<const char*, i64>{"c", c}, {"c1", c1}, {"c2", c2},
                           {"m", m}, {"n", n}, {"h", h}})
        if (mod_reduce(v, p) == 0)
            throw ZeroParameter(std::string("fk_sum: parameter ") + name + " vanishes mod p");

    const RootTable& roots = cache.roots(p);
    const auto& kl1 = cache.row(1, p);  // kl1[a] = S(a,1;p) = S(1,a;p)
    // S(a,b;p): both args 0 -> phi(p); one arg 0 -> Ramanujan sum c_p = -1;
    // else S(1, ab; p).
    auto S = [&](i64 a, i64 b) -> double {
        i64 ar = mod_reduce(a, p), br = mod_reduce(b, p);
        if (ar == 0 && br == 0) return static_cast<double>(p - 1);
        if (ar == 0 || br == 0) return -1.0;
        return kl1[static_cast<size_t>((ar * br) % p)];
    };

    i64 cr = mod_reduce(c, p), c1r = mod_reduce(c1, p), c2r = mod_reduce(c2, p);
    i64 mr = mod_reduce(m, p), nr = mod_reduce(n, p), hr = mod_reduce(h, p);
    cplx acc = 0.0;
    for (i64 x = 1; x < p; ++x) {
        double t = S(x, (x + hr) % p * c1r) * S(x, mr * c2r) * S((x + hr) % p, nr * c2r);
        acc += roots((cr * x) % p) * t;
    }
    FkResult out;
    out.value = ExpSumValue::certify(acc);
    out.ratio = std::abs(acc) / (static_cast<double>(p) * static_cast<double>(p));
    return out;
}

inline FkResult fk_sum(i64 p, i64 c, i64 c1, i64 c2, i64 m, i64 n, i64 h) {
    KloostermanCache cache;
    return fk_sum(p, c, c1, c2, m, n, h, cache);
}

// Shifted zero-frequency sum
//   E1(q;h,0) = sum*_{a mod q, (a+h,q)=1} S(a,m2;q/m1) S(a+h,m2';q/m1).
inline ExpSumValue charsum_zero_shifted(i64 q, i64 m1, i64 m2, i64 m2p, i64 h,
                                        KloostermanCache& cache) {
    if (q < 1) throw std::invalid_argument("charsum_zero_shifted: q must be >= 1");
    if (m1 < 1 || q % m1 != 0) throw std::invalid_argument("charsum_zero_shifted: m1 must divide q");
    const i64 Q1 = q / m1;
    const auto& rowA = cache.row(m2, Q1);
    const auto& rowB = cache.row(m2p, Q1);
    i64 hr = mod_reduce(h, q);
    KahanSum acc;
    if (q == 1) {
        acc.add(1.0);
    } else {
        for (i64 a = 1; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            i64 aph = (a + hr) % q;
            if (std::gcd(aph, q) != 1) continue;
            acc.add(rowA[static_cast<size_t>(a % Q1)] * rowB[static_cast<size_t>(aph % Q1)]);
        }
    }
    return ExpSumValue::certify(cplx{acc.value(), 0.0});
}

// Checks the factorization at n2 = 0, h != 0 mod q:
//   E(q;h,0) = (q^2/n1) * E1(q;h,0) * c_{q/n1}(-h)
// against the fourfold sum.
inline bool m4_factorization_check(i64 q, i64 n1, i64 m1, i64 m2, i64 m2p, i64 h,
                                   KloostermanCache& cache, i64 direct_cap = kCharsumDirectCap) {
    CharSumParams p(q, n1, m1, m2, m2p, h, 0);
    if (p.h == 0) throw std::invalid_argument("m4_factorization_check: h must be nonzero mod q");
    auto lhs = charsum_direct(p, cache, direct_cap);
    i64 P = q / n1;
    auto e1 = charsum_zero_shifted(q, m1, m2, m2p, p.h, cache);
    auto cq = ramanujan_sum(P, -p.h);
    cplx rhs = static_cast<double>(q) * static_cast<double>(P) * e1.value * cq.value;
    return std::abs(lhs.value - rhs) <= 1e-6 * (1.0 + std::abs(lhs.value));
}

inline bool m4_factorization_check(i64 q, i64 n1, i64 m1, i64 m2, i64 m2p, i64 h) {
    KloostermanCache cache;
    return m4_factorization_check(q, n1, m1, m2, m2p, h, cache);
}

// ---------------------------------------------------------------------------
// Modulus splitting q = q1 * q2' * q2''
// ---------------------------------------------------------------------------

struct ModulusSplit {
    i64 q1 = 1;    // part supported on the primes of n1*m1
    i64 q2p = 1;   // odd squarefree part of the rest
    i64 q2pp = 1;  // remaining part (odd primes with exponent >= 2, plus any 2-part)
};

// Primes dividing n1*m1 go to q1 (with their full exponent in q), so
// n1 | q1 | (n1*m1)^inf and gcd(q1, q/q1) = 1. Of the remainder, odd primes
// with exponent 1 form q2'; everything else (the 2-part included, keeping
// gcd(q2', 2*q2'') = 1) forms q2''. With the convention that 1 is squarefull,
// 4*q2'' is always squarefull.
inline ModulusSplit m3_split(i64 q, i64 n1, i64 m1) {
    if (q < 1 || n1 < 1 || m1 < 1) throw std::invalid_argument("m3_split: arguments must be >= 1");
    if (q % n1 != 0 || q % m1 != 0) throw std::invalid_argument("m3_split: n1 and m1 must divide q");
    ModulusSplit out;
    for (auto [p, e] : factorize(q).factors) {
        i64 pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if ((n1 * m1) % p == 0)
            out.q1 *= pe;
        else if (p == 2 || e >= 2)
            out.q2pp *= pe;
        else
            out.q2p *= pe;
    }
    return out;
}

inline bool squarefree(i64 n) {
    for (auto [p, e] : factorize(n).factors)
        if (e > 1) return false;
    return true;
}

// 1 counts as squarefull.
inline bool squarefull(i64 n) {
    for (auto [p, e] : factorize(n).factors)
        if (e < 2) return false;
    return true;
}

inline bool m3_split_valid(i64 q, i64 n1, i64 m1, const ModulusSplit& s) {
    if (s.q1 * s.q2p * s.q2pp != q) return false;
    if (s.q1 % n1 != 0) return false;
    for (auto [p, e] : factorize(s.q1).factors)
        if ((n1 * m1) % p != 0) return false;
    if (std::gcd(s.q1, q / s.q1) != 1) return false;
    if (std::gcd(s.q2p, 2 * s.q2pp) != 1) return false;
    if (!squarefree(s.q2p)) return false;
    if (!squarefull(4 * s.q2pp)) return false;
    return true;
}

struct M3ScanRow {
    i64 q = 0, n1 = 1, m1 = 1, q1 = 1, q2p = 1, q2pp = 1;
    bool split_ok = false;
    double max_ratio = 0.0;  // |E(q;h,n2)| n1^(3/2) m1 / (q^4 sqrt(q1*q2''))
};

// One evaluated sample inside the scan.
struct M3SampleRow {
    i64 q, n1, m1, m2, m2p, h, n2;
    cplx value;
    double bound;  // q^4 sqrt(q1*q2'') / (n1^(3/2) m1)
    double ratio;
};

// For each q <= qmax and each divisor pair (n1, m1): the splitting, its
// predicate checks, and the largest observed ratio over sampled
// (m2, m2', h, n2) with (h, n2) != (0, 0).
inline std::vector<M3ScanRow> m3_split_scan(i64 qmax, int samples_per_q, u64 seed,
                                            std::vector<M3SampleRow>* samples = nullptr,
                                            i64 reduced_cap = kCharsumReducedCap) {
    if (qmax > reduced_cap) throw CapExceeded("m3_split_scan: qmax beyond reduced cap");
    std::vector<M3ScanRow> rows;
    Rng rng(seed);
    KloostermanCache cache;
    for (i64 q = 1; q <= qmax; ++q) {
        for (i64 n1 : divisors(q)) {
            for (i64 m1 : divisors(q)) {
                M3ScanRow row;
                row.q = q;
                row.n1 = n1;
                row.m1 = m1;
                auto s = m3_split(q, n1, m1);
                row.q1 = s.q1;
                row.q2p = s.q2p;
                row.q2pp = s.q2pp;
                row.split_ok = m3_split_valid(q, n1, m1, s);
                double bound = std::pow(static_cast<double>(q), 4.0) *
                               std::sqrt(static_cast<double>(s.q1 * s.q2pp)) /
                               (std::pow(static_cast<double>(n1), 1.5) * static_cast<double>(m1));
                for (int t = 0; t < samples_per_q; ++t) {
                    i64 h = rng.below(q);
                    i64 n2 = rng.below(q / n1);
                    if (h == 0 && n2 == 0) h = 1 % q;
                    if (h == 0 && n2 == 0) continue;  // q = 1
                    i64 m2 = rng.below(q / m1);
                    i64 m2p = rng.below(q / m1);
                    CharSumParams p(q, n1, m1, m2, m2p, h, n2);
                    auto v = charsum_reduced(p, cache, reduced_cap);
                    double ratio = std::abs(v.value) / bound;
                    row.max_ratio = std::max(row.max_ratio, ratio);
                    if (samples)
                        samples->push_back({q, n1, m1, m2, m2p, h, n2, v.value, bound, ratio});
                }
                rows.push_back(row);
            }
        }
    }
    return rows;
}

}  // namespace scslab
