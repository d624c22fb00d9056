// verify.hpp
//
// The verification suites behind `scslab verify ...` and the acceptance
// runner. Each suite scans a parameter family, records violations without
// aborting, and returns a VerifyReport (plus an optional CSV table).
//
// Sampling is driven by an explicit seed and laid out before any parallel
// evaluation, so a given (command, seed) pair always produces the same rows.

#pragma once

#include <chrono>

#include "scslab/charsum.hpp"
#include "scslab/lemmas.hpp"
#include "scslab/report.hpp"
#include "scslab/scs.hpp"

namespace scslab::verify {

namespace detail {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

inline std::string tuple_str(std::initializer_list<i64> vs) {
    std::string s = "(";
    bool first = true;
    for (i64 v : vs) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Kloosterman sums: symmetry, reality, Weil bound, exhaustive over q <= qmax.
// ---------------------------------------------------------------------------
inline VerifyReport weil(i64 qmax, int workers = 1, CsvTable* csv = nullptr) {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify weil";
    rep.params = {{"qmax", qmax}};

    struct QResult {
        double max_ratio = 0.0;
        i64 checks = 0;
        std::vector<std::string> fails;
        std::string csv_row;  // worst pair per modulus
    };
    std::vector<QResult> per_q(static_cast<size_t>(qmax) + 1);

    parallel_blocks(qmax, 1, workers, [&](i64 /*b*/, i64 begin, i64 /*end*/) {
        const i64 q = begin + 1;
        QResult& res = per_q[static_cast<size_t>(q)];
        RootTable roots(q);
        auto inv = unit_inverse_table(q);
        const double dq = static_cast<double>(divisor_count(q));
        // full matrix S[a][b] accumulated from the defining sum, one unit x
        // at a time
        std::vector<cplx> mat(static_cast<size_t>(q) * static_cast<size_t>(q), cplx{0.0, 0.0});
        for (i64 x = (q == 1 ? 0 : 1); x < q; ++x) {
            i64 xin = q == 1 ? 0 : inv[static_cast<size_t>(x)];
            if (xin < 0) continue;
            for (i64 a = 0; a < q; ++a) {
                cplx* row = mat.data() + static_cast<size_t>(a) * static_cast<size_t>(q);
                i64 idx = (a * x) % q;
                for (i64 b = 0; b < q; ++b) {
                    row[b] += roots.data()[idx];
                    idx += xin;
                    if (idx >= q) idx -= q;
                }
            }
            if (q == 1) break;
        }
        const double sq = std::sqrt(static_cast<double>(q));
        i64 worst_a = 0, worst_b = 0;
        double worst = -1.0, worst_bound = 1.0;
        for (i64 a = 0; a < q; ++a) {
            for (i64 b = 0; b < q; ++b) {
                cplx s = mat[static_cast<size_t>(a) * static_cast<size_t>(q) + static_cast<size_t>(b)];
                cplx st = mat[static_cast<size_t>(b) * static_cast<size_t>(q) + static_cast<size_t>(a)];
                res.checks++;
                if (std::abs(s - st) > 1e-8 * static_cast<double>(q))
                    res.fails.push_back("symmetry" + detail::tuple_str({a, b, q}));
                if (std::abs(s.imag()) > 1e-8 * static_cast<double>(q))
                    res.fails.push_back("reality" + detail::tuple_str({a, b, q}));
                i64 g = std::gcd(std::gcd(a, b), q);
                double bound = dq * std::sqrt(static_cast<double>(g)) * sq;
                double ratio = std::abs(s) / bound;
                if (ratio > res.max_ratio) res.max_ratio = ratio;
                if (std::abs(s) > bound + 1e-9)
                    res.fails.push_back("weil" + detail::tuple_str({a, b, q}));
                if (std::abs(s) / bound > worst) {
                    worst = std::abs(s) / bound;
                    worst_a = a;
                    worst_b = b;
                    worst_bound = bound;
                }
            }
        }
        cplx ws = mat[static_cast<size_t>(worst_a) * static_cast<size_t>(q) + static_cast<size_t>(worst_b)];
        res.csv_row = std::to_string(q) + "," + std::to_string(worst_a) + "," +
                      std::to_string(worst_b) + "," + fmt_double(ws.real()) + "," +
                      fmt_double(ws.imag()) + "," + fmt_double(worst_bound) + "," + fmt_double(worst);
    });

    for (i64 q = 1; q <= qmax; ++q) {
        auto& res = per_q[static_cast<size_t>(q)];
        rep.checks += res.checks;
        rep.observe_ratio(res.max_ratio);
        for (auto& f : res.fails) rep.fail(f);
        if (csv) csv->add_row({res.csv_row});
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Twisted multiplicativity over coprime pairs, sampled (a,b).
// ---------------------------------------------------------------------------
inline VerifyReport mult_b31(i64 qmax, u64 seed, int samples_per_pair = 6) {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify mult-b31";
    rep.params = {{"qmax", qmax}, {"seed", seed}, {"samples", samples_per_pair}};
    Rng rng(seed);
    for (i64 q1 = 1; q1 <= qmax; ++q1) {
        for (i64 q2 = q1; q2 <= qmax; ++q2) {
            if (std::gcd(q1, q2) != 1) continue;
            for (int t = 0; t < samples_per_pair; ++t) {
                i64 a = rng.below(q1 * q2), b = rng.below(q1 * q2);
                rep.checks++;
                if (!twisted_multiplicativity_check(a, b, q1, q2))
                    rep.fail("b31" + detail::tuple_str({a, b, q1, q2}));
            }
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// Scaling identity S(am,bm;q) = S(am^2,b;q) = S(a,bm^2;q), sampled.
inline VerifyReport scale_b32(i64 qmax, u64 seed, int samples_per_q = 8) {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify scale-b32";
    rep.params = {{"qmax", qmax}, {"seed", seed}, {"samples", samples_per_q}};
    Rng rng(seed);
    for (i64 q = 1; q <= qmax; ++q) {
        auto units = units_mod(q);
        for (int t = 0; t < samples_per_q; ++t) {
            i64 a = rng.below(q), b = rng.below(q);
            i64 m = units[static_cast<size_t>(rng.below(static_cast<i64>(units.size())))];
            if (q == 1) m = 1;
            rep.checks++;
            if (!scaling_identity_check(a, b, m, q))
                rep.fail("b32" + detail::tuple_str({a, b, m, q}));
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Direct vs reduced character-sum equivalence (the oracle suite).
//
// Equivalence is checked on every sampled tuple. Integer certification and
// the small-imaginary-part bound are checked on the zero-frequency tuples
// (h = n2 = 0): those sums are Galois stable and provably rational integers,
// while a generic (h, n2) maps under t in (Z/q)* to the parameters
// (th, n2/t, t m2, t m2'), so the generic value is a non-rational algebraic
// number (e.g. E(5; 2,4) with m2=1, m2'=3 is -46.35... + 278.37...i).
// ---------------------------------------------------------------------------
inline VerifyReport charsum_equiv(i64 qmax, u64 seed, int samples_per_divpair = 50,
                                  int workers = 1) {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify charsum-equiv";
    rep.params = {{"qmax", qmax}, {"seed", seed}, {"samples", samples_per_divpair}};

    struct Task {
        i64 q, n1, m1, m2, m2p, h, n2;
    };
    std::vector<Task> tasks;
    Rng rng(seed);
    for (i64 q = 1; q <= qmax; ++q) {
        for (i64 n1 : divisors(q)) {
            for (i64 m1 : divisors(q)) {
                for (int t = 0; t < samples_per_divpair; ++t) {
                    Task tk{q, n1, m1, rng.below(q / m1), rng.below(q / m1), rng.below(q),
                            rng.below(q / n1)};
                    tasks.push_back(tk);
                }
                // zero-frequency tuples carry the integrality checks
                for (int t = 0; t < 8; ++t)
                    tasks.push_back(Task{q, n1, m1, rng.below(q / m1), rng.below(q / m1), 0, 0});
            }
        }
    }

    std::vector<std::string> fail_at(tasks.size());
    parallel_blocks(static_cast<i64>(tasks.size()), 16, workers, [&](i64, i64 begin, i64 end) {
        KloostermanCache cache;
        for (i64 i = begin; i < end; ++i) {
            const Task& t = tasks[static_cast<size_t>(i)];
            CharSumParams p(t.q, t.n1, t.m1, t.m2, t.m2p, t.h, t.n2);
            auto direct = charsum_direct(p, cache);
            auto reduced = charsum_reduced(p, cache);
            double tol = 1e-6 * (1.0 + std::abs(direct.value));
            if (std::abs(direct.value - reduced.value) > tol) {
                fail_at[static_cast<size_t>(i)] =
                    "equiv" + detail::tuple_str({t.q, t.n1, t.m1, t.m2, t.m2p, t.h, t.n2});
                continue;
            }
            if (p.h == 0 && p.n2 == 0) {
                double q3 = static_cast<double>(t.q) * t.q * t.q;
                if (!direct.as_integer || std::abs(direct.value.imag()) > 1e-6 * q3)
                    fail_at[static_cast<size_t>(i)] =
                        "integer-cert" + detail::tuple_str({t.q, t.n1, t.m1, t.m2, t.m2p});
            }
        }
    });
    for (size_t i = 0; i < tasks.size(); ++i) {
        rep.checks++;
        if (!fail_at[i].empty()) rep.fail(fail_at[i]);
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Multiplicativity of the zero-frequency sum over coprime splittings.
// ---------------------------------------------------------------------------
inline VerifyReport lemma_b30(i64 qmax, u64 seed, int samples_per_split = 4) {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify lemma-b30";
    rep.params = {{"qmax", qmax}, {"seed", seed}, {"samples", samples_per_split}};
    Rng rng(seed);
    KloostermanCache cache;
    for (i64 q = 1; q <= qmax; ++q) {
        for (i64 q1 : divisors(q)) {
            i64 q2 = q / q1;
            if (std::gcd(q1, q2) != 1) continue;
            for (i64 m1a : divisors(q1)) {
                for (i64 m1b : divisors(q2)) {
                    for (int t = 0; t < samples_per_split; ++t) {
                        i64 m1 = m1a * m1b;
                        i64 m2 = rng.below(q / m1), m2p = rng.below(q / m1);
                        rep.checks++;
                        if (!multiplicativity_check(q1, q2, {m1a, m1b}, m2, m2p, cache))
                            rep.fail("b30" + detail::tuple_str({q1, q2, m1a, m1b, m2, m2p}));
                    }
                }
            }
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Closed forms of the zero-frequency sum at primes and prime powers, plus the
// zero-frequency factorization E(q;0,0) = (q^2/n1) phi(q/n1) E1(q;0,0).
// ---------------------------------------------------------------------------
inline VerifyReport lemma_b17(i64 pmax, int workers = 1, CsvTable* csv = nullptr) {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify lemma-b17";
    rep.params = {{"qmax", pmax}};

    std::vector<i64> primes;
    for (i64 p = 2; p <= pmax; ++p)
        if (is_prime(p)) primes.push_back(p);

    struct PResult {
        i64 checks = 0;
        std::vector<std::string> fails;
        std::vector<std::string> csv_rows;
    };
    std::vector<PResult> results(primes.size());
    parallel_blocks(static_cast<i64>(primes.size()), 1, workers, [&](i64, i64 begin, i64) {
        i64 p = primes[static_cast<size_t>(begin)];
        PResult& res = results[static_cast<size_t>(begin)];
        KloostermanCache cache;
        for (i64 m2 = 0; m2 < p; ++m2) {
            for (i64 m2p = 0; m2p < p; ++m2p) {
                i64 formula = zero_closed_form_prime(p, m2, m2p);
                auto brute = charsum_zero(p, 1, m2, m2p, cache);
                res.checks++;
                if (!brute.as_integer || *brute.as_integer != formula)
                    res.fails.push_back("b17-prime" + detail::tuple_str({p, m2, m2p}));
                if (csv)
                    res.csv_rows.push_back(
                        std::to_string(p) + ",1,1," + std::to_string(m2) + "," +
                        std::to_string(m2p) + ",0,0," + fmt_double(brute.value.real()) + "," +
                        fmt_double(brute.value.imag()) + "," + std::to_string(formula) + "," +
                        fmt_double(std::abs(brute.value) / std::max(1.0, std::abs(static_cast<double>(formula)))));
            }
        }
    });
    for (auto& res : results) {
        rep.checks += res.checks;
        for (auto& f : res.fails) rep.fail(f);
        if (csv)
            for (auto& r : res.csv_rows) csv->add_row({r});
    }

    // prime powers
    KloostermanCache cache;
    for (auto [p, gamma] : std::initializer_list<std::pair<i64, int>>{
             {2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {3, 4}, {11, 2}, {5, 3}}) {
        i64 pg = 1;
        for (int i = 0; i < gamma; ++i) pg *= p;
        for (i64 m2 = 0; m2 < pg; ++m2) {
            for (i64 m2p = 0; m2p < pg; ++m2p) {
                i64 formula = zero_closed_form_prime_power(p, gamma, m2, m2p);
                auto brute = charsum_zero(pg, 1, m2, m2p, cache);
                rep.checks++;
                if (!brute.as_integer || *brute.as_integer != formula)
                    rep.fail("b17-pp" + detail::tuple_str({p, gamma, m2, m2p}));
            }
        }
    }

    // zero-frequency factorization over small composite q
    Rng rng(0);
    for (i64 q = 1; q <= std::min<i64>(pmax, kCharsumDirectCap); ++q) {
        for (i64 n1 : divisors(q)) {
            for (i64 m1 : divisors(q)) {
                i64 m2 = rng.below(q / m1), m2p = rng.below(q / m1);
                CharSumParams prm(q, n1, m1, m2, m2p, 0, 0);
                auto whole = charsum_direct(prm, cache);
                auto e1 = charsum_zero(q, m1, m2, m2p, cache);
                double expect = static_cast<double>(q) * (q / n1) * euler_phi(q / n1) *
                                e1.value.real();
                rep.checks++;
                if (std::abs(whole.value.real() - expect) > 1e-6 * (1.0 + std::abs(expect)) ||
                    std::abs(whole.value.imag()) > 1e-6 * (1.0 + std::abs(expect)))
                    rep.fail("b17-zero-freq" + detail::tuple_str({q, n1, m1, m2, m2p}));
            }
        }
    }

    // bound shape |E(q;0,0)| <= (q^5/(n1^2 m1)) q^0.1 whenever m2 = m2' mod
    // q2, with q = q1*q2, q1 | m1^inf, gcd(q2, m1) = 1; E(q;0,0) evaluated
    // through the factorization checked above
    for (i64 q = 1; q <= 60; ++q) {
        for (i64 n1 : divisors(q)) {
            for (i64 m1 : divisors(q)) {
                i64 q1 = 1;
                for (auto [p, e] : factorize(q).factors) {
                    if (m1 % p != 0) continue;
                    i64 pe = 1;
                    for (int i = 0; i < e; ++i) pe *= p;
                    q1 *= pe;
                }
                i64 q2 = q / q1;
                i64 Q1 = q / m1;
                double bound = std::pow(static_cast<double>(q), 5.1) /
                               (static_cast<double>(n1) * n1 * m1);
                double phiP = static_cast<double>(euler_phi(q / n1));
                for (i64 m2 = 0; m2 < Q1; ++m2) {
                    for (i64 m2p = m2 % q2; m2p < Q1; m2p += q2) {
                        auto e1 = charsum_zero(q, m1, m2, m2p, cache);
                        double whole = static_cast<double>(q) * (q / n1) * phiP * e1.value.real();
                        rep.checks++;
                        if (std::abs(whole) > bound * (1.0 + 1e-9))
                            rep.fail("b17-bound-shape" + detail::tuple_str({q, n1, m1, m2, m2p}));
                    }
                }
            }
        }
    }

    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Triple-Kloosterman square-root cancellation: ratio <= threshold for all
// primes p <= pmax, sampled nonzero parameter tuples.
// ---------------------------------------------------------------------------
inline VerifyReport lemma_fk(i64 pmax, u64 seed, int tuples_per_prime = 200,
                             double threshold = 8.0, CsvTable* csv = nullptr) {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify lemma-fk";
    rep.params = {{"qmax", pmax}, {"seed", seed}, {"tuples", tuples_per_prime},
                  {"threshold", threshold}};
    Rng rng(seed);
    for (i64 p = 2; p <= pmax; ++p) {
        if (!is_prime(p)) continue;
        KloostermanCache cache;
        for (int t = 0; t < tuples_per_prime; ++t) {
            i64 c = rng.between(1, p - 1), c1 = rng.between(1, p - 1), c2 = rng.between(1, p - 1);
            i64 m = rng.between(1, p - 1), n = rng.between(1, p - 1), h = rng.between(1, p - 1);
            auto r = fk_sum(p, c, c1, c2, m, n, h, cache);
            rep.checks++;
            rep.observe_ratio(r.ratio);
            if (r.ratio > threshold)
                rep.fail("fk" + detail::tuple_str({p, c, c1, c2, m, n, h}));
            if (csv)
                csv->add_row({std::to_string(p), std::to_string(c), std::to_string(c1),
                              std::to_string(c2), std::to_string(m), std::to_string(n),
                              std::to_string(h), fmt_double(r.value.value.real()),
                              fmt_double(r.value.value.imag()),
                              fmt_double(threshold * p * p), fmt_double(r.ratio)});
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Ramanujan-sum factorization of the h != 0, n2 = 0 case.
// ---------------------------------------------------------------------------
inline VerifyReport lemma_m4(i64 qmax, u64 seed, int samples_per_divpair = 12) {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify lemma-m4";
    rep.params = {{"qmax", qmax}, {"seed", seed}, {"samples", samples_per_divpair}};
    Rng rng(seed);
    KloostermanCache cache;
    for (i64 q = 2; q <= qmax; ++q) {
        for (i64 n1 : divisors(q)) {
            for (i64 m1 : divisors(q)) {
                for (int t = 0; t < samples_per_divpair; ++t) {
                    i64 m2 = rng.below(q / m1), m2p = rng.below(q / m1);
                    i64 h = rng.between(1, q - 1);
                    rep.checks++;
                    if (!m4_factorization_check(q, n1, m1, m2, m2p, h, cache))
                        rep.fail("m4" + detail::tuple_str({q, n1, m1, m2, m2p, h}));
                }
            }
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Squarefree/squarefull modulus splitting scan.
// ---------------------------------------------------------------------------
inline VerifyReport m3_split(i64 qmax, u64 seed, int samples_per_q = 6, CsvTable* csv = nullptr) {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify m3-split";
    rep.params = {{"qmax", qmax}, {"seed", seed}, {"samples", samples_per_q}};
    std::vector<M3SampleRow> samples;
    auto rows = m3_split_scan(qmax, samples_per_q, seed, csv ? &samples : nullptr);
    for (const auto& r : rows) {
        rep.checks++;
        if (!r.split_ok) rep.fail("m3-split" + detail::tuple_str({r.q, r.n1, r.m1}));
        if (!std::isfinite(r.max_ratio)) rep.fail("m3-ratio" + detail::tuple_str({r.q, r.n1, r.m1}));
        rep.observe_ratio(r.max_ratio);
    }
    if (csv)
        for (const auto& s : samples)
            csv->add_row({std::to_string(s.q), std::to_string(s.n1), std::to_string(s.m1),
                          std::to_string(s.m2), std::to_string(s.m2p), std::to_string(s.h),
                          std::to_string(s.n2), fmt_double(s.value.real()),
                          fmt_double(s.value.imag()), fmt_double(s.bound), fmt_double(s.ratio)});
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Elementary lemmas.
// ---------------------------------------------------------------------------
inline VerifyReport lemma_ll1() {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify lemma-ll1";
    if (gcd_average(10, 6) != 23) rep.fail("gcd_average(10,6) != 23");
    rep.checks++;
    for (i64 X : {1, 10, 100, 1000, 10000}) {
        if (gcd_average(X, 1) != X) rep.fail("gcd_average(X,1) != X at X=" + std::to_string(X));
        rep.checks++;
        for (i64 m : {2, 3, 6, 12, 30, 60, 120, 210, 360, 720, 840, 997, 1000}) {
            i64 v = gcd_average(X, m);
            rep.checks++;
            rep.observe_ratio(static_cast<double>(v) /
                              (static_cast<double>(X) * static_cast<double>(divisor_count(m))));
            if (v > X * divisor_count(m))
                rep.fail("gcd_average bound" + detail::tuple_str({X, m}));
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

inline VerifyReport lemma_ll2() {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify lemma-ll2";
    if (squarefull_count(1) != 1) rep.fail("squarefull_count(1) != 1");
    if (squarefull_count(100) != 14) rep.fail("squarefull_count(100) != 14");
    rep.checks += 2;
    for (i64 X : {10000LL, 1000000LL, 100000000LL}) {
        double ratio = static_cast<double>(squarefull_count(X)) / std::sqrt(static_cast<double>(X));
        rep.checks++;
        rep.observe_ratio(ratio);
        if (ratio < 1.5 || ratio > 2.5)
            rep.fail("squarefull ratio " + fmt_double(ratio) + " at X=" + std::to_string(X));
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

inline VerifyReport poisson() {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify poisson";
    for (double sigma : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        auto c = poisson_gaussian_check(sigma);
        rep.checks++;
        rep.observe_ratio(c.diff);
        if (c.diff > 1e-12) rep.fail("poisson diff " + fmt_double(c.diff) + " at sigma=" + fmt_double(sigma));
    }
    auto c1 = poisson_gaussian_check(1.0);
    if (std::abs(c1.lhs - 1.0864348) > 1e-6) rep.fail("self-dual value off: " + fmt_double(c1.lhs));
    rep.checks++;
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Delta-method cross-check on sampled configurations.
// ---------------------------------------------------------------------------
inline VerifyReport delta_crosscheck_suite() {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify delta-crosscheck";
    struct Case {
        i64 X, H, Q0;
        const char* a;
        const char* b;
    };
    for (const Case& c : {Case{50, 5, 500, "d2", "d2"}, Case{100, 10, 1000, "gl3", "gl3"},
                          Case{80, 8, 800, "tau", "gl3"}, Case{1, 1, 16, "d2", "d2"}}) {
        i64 limit = 2 * c.X + 4 * c.H;
        auto make = [&](const char* name) {
            if (std::string(name) == "d2") return CoefficientSeries::divisor(2, limit);
            if (std::string(name) == "gl3") return CoefficientSeries::gl3(limit);
            return CoefficientSeries::tau(limit);
        };
        auto sa = make(c.a);
        auto sb = make(c.b);
        SCSConfig cfg;
        cfg.X = c.X;
        cfg.H = c.H;
        cfg.series_a = &sa;
        cfg.series_b = &sb;
        rep.checks++;
        if (!delta_crosscheck(cfg, c.Q0))
            rep.fail(std::string("delta") + detail::tuple_str({c.X, c.H, c.Q0}) + c.a + "/" + c.b);
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// SCS engine checks: naive-loop equality, envelope ratio, weight
// monotonicity.
// ---------------------------------------------------------------------------
inline double scs_L_naive(const SCSConfig& cfg) {
    KahanSum acc;
    for (i64 h = 1; h <= 3 * cfg.H; ++h) {
        double w1 = cfg.w1(static_cast<double>(h) / static_cast<double>(cfg.H));
        if (w1 == 0.0) continue;
        for (i64 n = 1; n <= 3 * cfg.X; ++n) {
            double w2 = cfg.w2(static_cast<double>(n) / static_cast<double>(cfg.X));
            if (w2 == 0.0) continue;
            acc.add(w1 * w2 * cfg.series_a->a1(n) * cfg.series_b->a1(n + h));
        }
    }
    return acc.value() / static_cast<double>(cfg.H);
}

inline VerifyReport scs_suite(int workers = 1) {
    detail::Stopwatch sw;
    VerifyReport rep;
    rep.command = "verify scs";
    struct Case {
        i64 X, H;
        const char* a;
        const char* b;
    };
    for (const Case& c : {Case{100, 10, "d2", "d2"}, Case{250, 25, "gl3", "gl3"},
                          Case{500, 50, "gl3", "d2"}, Case{500, 22, "tau", "gl3"}}) {
        i64 limit = 2 * c.X + 4 * c.H + 8;
        auto make = [&](const char* name) {
            if (std::string(name) == "d2") return CoefficientSeries::divisor(2, limit);
            if (std::string(name) == "gl3") return CoefficientSeries::gl3(limit);
            return CoefficientSeries::tau(limit);
        };
        auto sa = make(c.a);
        auto sb = make(c.b);
        SCSConfig cfg;
        cfg.X = c.X;
        cfg.H = c.H;
        cfg.series_a = &sa;
        cfg.series_b = &sb;

        double fast = scs_L(cfg, workers);
        double naive = scs_L_naive(cfg);
        rep.checks++;
        if (std::abs(fast - naive) > 1e-9 * (1.0 + std::max(std::abs(fast), std::abs(naive))))
            rep.fail("naive-mismatch" + detail::tuple_str({c.X, c.H}));

        auto bound = trivial_bound_report(cfg, workers);
        rep.checks++;
        rep.observe_ratio(bound.ratio);
        if (bound.ratio > 1.0 + 1e-12) rep.fail("ratio>1" + detail::tuple_str({c.X, c.H}));

        // a pointwise smaller weight cannot increase L for nonnegative series
        if (std::string(c.a) != "tau" && std::string(c.b) != "tau") {
            SCSConfig smaller = cfg;
            smaller.w2 = Weight::smooth(0.5);
            rep.checks++;
            if (scs_L(smaller, workers) > fast + 1e-12)
                rep.fail("monotonicity" + detail::tuple_str({c.X, c.H}));
        }
    }
    rep.elapsed_ms = sw.ms();
    return rep;
}

}  // namespace scslab::verify
