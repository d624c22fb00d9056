// coeffs.hpp
//
// Computable arithmetic coefficient families: generalized divisor functions
// d_k, the zeta^3 Eisenstein two-index coefficients A(m,n) (Satake parameters
// (1,1,1), so A(p^a,p^b) = (a+1)(b+1)(a+b+2)/2), the Ramanujan tau series
// from the weight-12 eta product, and the averaged second-moment sums over
// them.

#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>

#include "scslab/modarith.hpp"

namespace scslab {

// ---------------------------------------------------------------------------
// Divisor functions
// ---------------------------------------------------------------------------

// d_k(n): number of ordered k-tuples with product n. d_k(p^a) = C(a+k-1, k-1).
inline i64 divisor_k(i64 n, int k) {
    if (n < 1) throw std::invalid_argument("divisor_k: n must be >= 1");
    if (k < 2) throw std::invalid_argument("divisor_k: k must be >= 2");
    auto f = factorize(n);
    i64 out = 1;
    for (auto [p, e] : f.factors) {
        // C(e+k-1, k-1)
        i64 binom = 1;
        for (int i = 1; i <= e; ++i) binom = binom * (k - 1 + i) / i;
        out *= binom;
    }
    return out;
}

// Dense d_k table for 1..limit via k-1 divisor-convolution passes.
inline std::vector<i64> divisor_k_table(int k, i64 limit) {
    std::vector<i64> cur(static_cast<size_t>(limit) + 1, 1);
    cur[0] = 0;
    for (int pass = 1; pass < k; ++pass) {
        std::vector<i64> next(static_cast<size_t>(limit) + 1, 0);
        for (i64 d = 1; d <= limit; ++d)
            for (i64 m = d; m <= limit; m += d) next[static_cast<size_t>(m)] += cur[static_cast<size_t>(m / d)];
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// zeta^3 Eisenstein coefficients
// ---------------------------------------------------------------------------

// A(m,n), multiplicative over primes with the Schur-dimension values at
// (1,1,1). A(1,n) = d_3(n).
inline i64 gl3_eisenstein(i64 m, i64 n) {
    if (m < 1 || n < 1) throw std::invalid_argument("gl3_eisenstein: indices must be >= 1");
    auto fm = factorize(m);
    auto fn = factorize(n);
    std::map<i64, std::pair<int, int>> exps;
    for (auto [p, e] : fm.factors) exps[p].first = e;
    for (auto [p, e] : fn.factors) exps[p].second = e;
    i64 out = 1;
    for (auto& [p, ab] : exps) {
        i64 a = ab.first, b = ab.second;
        out *= (a + 1) * (b + 1) * (a + b + 2) / 2;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ramanujan tau
// ---------------------------------------------------------------------------

namespace detail {

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("tau series overflow");
    return r;
}

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("tau series overflow");
    return r;
}

inline std::string i128_to_string(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    u128 ux = neg ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
    std::string s;
    while (ux) {
        s += static_cast<char>('0' + static_cast<int>(ux % 10));
        ux /= 10;
    }
    if (neg) s += '-';
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace detail

// tau(n) for n = 1..cap, from q * prod(1-q^n)^24. The product is the 8th
// power of the sparse cube prod(1-q^n)^3 = sum (-1)^k (2k+1) q^{k(k+1)/2},
// applied as eight in-place sparse convolutions: O(cap^{3/2}) total.
// Coefficients are held in 128-bit integers with overflow checking.
class TauSeries {
  public:
    static constexpr char kCacheMagic[9] = "SCSLTAU1";

    explicit TauSeries(i64 cap) : cap_(cap) {
        if (cap < 1) throw std::invalid_argument("TauSeries: cap must be >= 1");
        build();
    }

    i64 cap() const { return cap_; }

    i128 tau(i64 n) const {
        if (n < 1) throw std::invalid_argument("tau: n must be >= 1");
        if (n > cap_) throw CapExceeded("tau(" + std::to_string(n) + ") beyond cap " + std::to_string(cap_));
        return coeff_[static_cast<size_t>(n - 1)];
    }

    // normalized coefficient tau(n) / n^(11/2)
    double lambda(i64 n) const {
        return static_cast<double>(tau(n)) / std::pow(static_cast<double>(n), 5.5);
    }

    // Cache file: 8-byte magic then tau(1), tau(2), ... as little-endian
    // signed 64-bit values. Writing stops before the first value that does
    // not fit 64 bits, so the file always holds an exact prefix.
    void save_cache(const std::string& path) const {
        std::FILE* f = std::fopen(path.c_str(), "wb");
        if (!f) throw std::runtime_error("cannot write tau cache: " + path);
        std::fwrite(kCacheMagic, 1, 8, f);
        for (i64 n = 1; n <= cap_; ++n) {
            i128 v = coeff_[static_cast<size_t>(n - 1)];
            if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN)) break;
            unsigned char buf[8];
            u64 u = static_cast<u64>(static_cast<i64>(v));
            for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xff);
            std::fwrite(buf, 1, 8, f);
        }
        std::fclose(f);
    }

    // Returns the cached prefix, or an empty vector when the file is missing
    // or carries the wrong magic.
    static std::vector<i64> load_cache(const std::string& path) {
        std::vector<i64> out;
        std::FILE* f = std::fopen(path.c_str(), "rb");
        if (!f) return out;
        char magic[8];
        if (std::fread(magic, 1, 8, f) != 8 || std::memcmp(magic, kCacheMagic, 8) != 0) {
            std::fclose(f);
            return out;
        }
        unsigned char buf[8];
        while (std::fread(buf, 1, 8, f) == 8) {
            u64 u = 0;
            for (int i = 0; i < 8; ++i) u |= static_cast<u64>(buf[i]) << (8 * i);
            out.push_back(static_cast<i64>(u));
        }
        std::fclose(f);
        return out;
    }

  private:
    void build() {
        const size_t n = static_cast<size_t>(cap_);
        coeff_.assign(n, 0);
        coeff_[0] = 1;
        // sparse cube: offsets k(k+1)/2 with signs (-1)^k (2k+1)
        std::vector<std::pair<i64, i64>> cube;
        for (i64 k = 0;; ++k) {
            i64 t = k * (k + 1) / 2;
            if (t >= cap_) break;
            cube.emplace_back(t, (k % 2 == 0 ? 1 : -1) * (2 * k + 1));
        }
        for (int pass = 0; pass < 8; ++pass) {
            for (i64 m = cap_ - 1; m >= 1; --m) {
                i128 acc = coeff_[static_cast<size_t>(m)];  // k = 0 term
                for (size_t j = 1; j < cube.size(); ++j) {
                    i64 t = cube[j].first;
                    if (t > m) break;
                    i128 c = coeff_[static_cast<size_t>(m - t)];
                    if (c != 0)
                        acc = detail::checked_add(acc, detail::checked_mul(c, cube[j].second));
                }
                coeff_[static_cast<size_t>(m)] = acc;
            }
        }
    }

    i64 cap_;
    std::vector<i128> coeff_;  // coeff_[j] = tau(j+1)
};

// ---------------------------------------------------------------------------
// CoefficientSeries: one computable family behind a dense value cache
// ---------------------------------------------------------------------------

class CoefficientSeries {
  public:
    enum class Kind { divisor, gl3_eisenstein, tau_normalized, custom };

    static CoefficientSeries divisor(int k, i64 limit) {
        CoefficientSeries s(Kind::divisor, k, limit);
        auto table = divisor_k_table(k, limit);
        s.cache_.resize(static_cast<size_t>(limit) + 1, 0.0);
        for (i64 i = 1; i <= limit; ++i) s.cache_[static_cast<size_t>(i)] = static_cast<double>(table[static_cast<size_t>(i)]);
        return s;
    }

    static CoefficientSeries gl3(i64 limit) {
        CoefficientSeries s(Kind::gl3_eisenstein, 3, limit);
        auto table = divisor_k_table(3, limit);
        s.cache_.resize(static_cast<size_t>(limit) + 1, 0.0);
        for (i64 i = 1; i <= limit; ++i) s.cache_[static_cast<size_t>(i)] = static_cast<double>(table[static_cast<size_t>(i)]);
        return s;
    }

    static CoefficientSeries tau(const TauSeries& ts, i64 limit) {
        if (ts.cap() < limit) throw CapExceeded("tau series cap below requested limit");
        CoefficientSeries s(Kind::tau_normalized, 0, limit);
        s.cache_.resize(static_cast<size_t>(limit) + 1, 0.0);
        for (i64 i = 1; i <= limit; ++i) s.cache_[static_cast<size_t>(i)] = ts.lambda(i);
        return s;
    }

    static CoefficientSeries tau(i64 limit) { return tau(TauSeries(limit), limit); }

    // synthetic coefficients for degenerate configurations (all-ones, zero,
    // hand-built vectors); values[i] is the coefficient at index i+1
    static CoefficientSeries from_values(const std::vector<double>& values) {
        CoefficientSeries s(Kind::custom, 0, static_cast<i64>(values.size()));
        s.cache_.resize(values.size() + 1, 0.0);
        std::copy(values.begin(), values.end(), s.cache_.begin() + 1);
        return s;
    }

    static CoefficientSeries constant(double value, i64 limit) {
        return from_values(std::vector<double>(static_cast<size_t>(limit), value));
    }

    // lambda values from a raw tau table (tab[i] = tau(i+1)), as loaded from
    // a cache file.
    static CoefficientSeries tau_from_table(const std::vector<i64>& tab, i64 limit) {
        if (static_cast<i64>(tab.size()) < limit)
            throw CapExceeded("tau table shorter than requested limit");
        CoefficientSeries s(Kind::tau_normalized, 0, limit);
        s.cache_.resize(static_cast<size_t>(limit) + 1, 0.0);
        for (i64 i = 1; i <= limit; ++i)
            s.cache_[static_cast<size_t>(i)] = static_cast<double>(tab[static_cast<size_t>(i - 1)]) /
                                               std::pow(static_cast<double>(i), 5.5);
        return s;
    }

    Kind kind() const { return kind_; }
    int order() const { return k_; }
    i64 limit() const { return limit_; }

    // A(1,n) for the gl3 family, d_k(n) for divisor, lambda(n) for tau.
    double a1(i64 n) const {
        if (n < 1) throw std::invalid_argument("a1: n must be >= 1");
        if (n > limit_) throw CapExceeded("series cache covers up to " + std::to_string(limit_));
        return cache_[static_cast<size_t>(n)];
    }

    bool two_index() const { return kind_ == Kind::gl3_eisenstein; }

    double a2(i64 m, i64 n) const {
        if (!two_index()) throw std::invalid_argument("a2: series has a single index");
        return static_cast<double>(gl3_eisenstein(m, n));
    }

    std::string name() const {
        switch (kind_) {
            case Kind::divisor: return "d" + std::to_string(k_);
            case Kind::gl3_eisenstein: return "gl3";
            case Kind::tau_normalized: return "tau";
            case Kind::custom: return "custom";
        }
        return "?";
    }

  private:
    CoefficientSeries(Kind kind, int k, i64 limit) : kind_(kind), k_(k), limit_(limit) {
        if (limit < 1) throw std::invalid_argument("CoefficientSeries: limit must be >= 1");
    }

    Kind kind_;
    int k_;
    i64 limit_;
    std::vector<double> cache_;
};

// tau-backed series routed through the binary cache at
// $SCSLAB_CACHE_DIR/tau.bin when that variable is set. The cache holds the
// exact 64-bit prefix of the tau table; limits beyond it fall back to a fresh
// computation (saved back for the next run).
inline CoefficientSeries tau_series_cached(i64 limit) {
    const char* dir = std::getenv("SCSLAB_CACHE_DIR");
    if (!dir || !*dir) return CoefficientSeries::tau(limit);
    std::string path = std::string(dir) + "/tau.bin";
    auto vals = TauSeries::load_cache(path);
    if (static_cast<i64>(vals.size()) >= limit)
        return CoefficientSeries::tau_from_table(vals, limit);
    TauSeries ts(limit);
    ts.save_cache(path);
    return CoefficientSeries::tau(ts, limit);
}

// Right-hand side of the Hecke relation:
// sum over d | gcd(m,n) of mu(d) * a1(m/d) * a1(n/d).
inline double hecke_expand(i64 m, i64 n, const CoefficientSeries& series) {
    if (m < 1 || n < 1) throw std::invalid_argument("hecke_expand: indices must be >= 1");
    double acc = 0.0;
    for (i64 d : divisors(std::gcd(m, n))) {
        int mu = mobius(d);
        if (mu == 0) continue;
        acc += mu * series.a1(m / d) * series.a1(n / d);
    }
    return acc;
}

namespace detail {

// smallest-prime-factor sieve for fast repeated factorization in the
// averaged sums
inline std::vector<int32_t> spf_sieve(i64 limit) {
    std::vector<int32_t> spf(static_cast<size_t>(limit) + 1, 0);
    for (i64 i = 2; i <= limit; ++i) {
        if (spf[static_cast<size_t>(i)] == 0) {
            for (i64 j = i; j <= limit; j += i)
                if (spf[static_cast<size_t>(j)] == 0) spf[static_cast<size_t>(j)] = static_cast<int32_t>(i);
        }
    }
    return spf;
}

inline void factor_into(i64 n, const std::vector<int32_t>& spf, std::map<i64, std::pair<int, int>>& exps,
                        bool second) {
    while (n > 1) {
        i64 p = spf[static_cast<size_t>(n)];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (second)
            exps[p].second += e;
        else
            exps[p].first += e;
    }
}

}  // namespace detail

// sum over m^2*n <= X of A(m,n)^2 for the two-index family.
inline double rankin_selberg_avg(const CoefficientSeries& series, i64 X) {
    if (X < 1) throw std::invalid_argument("rankin_selberg_avg: X must be >= 1");
    if (!series.two_index())
        throw std::invalid_argument("rankin_selberg_avg: needs a two-index family");
    auto spf = detail::spf_sieve(X);
    KahanSum acc;
    for (i64 m = 1; m * m <= X; ++m) {
        i64 nmax = X / (m * m);
        for (i64 n = 1; n <= nmax; ++n) {
            std::map<i64, std::pair<int, int>> exps;
            detail::factor_into(m, spf, exps, false);
            detail::factor_into(n, spf, exps, true);
            double a = 1.0;
            for (auto& [p, ab] : exps)
                a *= static_cast<double>((ab.first + 1) * (ab.second + 1) * (ab.first + ab.second + 2)) / 2.0;
            acc.add(a * a);
        }
    }
    return acc.value();
}

// sum over n in (X, 2X] of A(m,n)^2.
inline double fixed_m_avg(const CoefficientSeries& series, i64 m, i64 X) {
    if (m < 1 || X < 1) throw std::invalid_argument("fixed_m_avg: arguments must be >= 1");
    if (!series.two_index())
        throw std::invalid_argument("fixed_m_avg: needs a two-index family");
    auto spf = detail::spf_sieve(std::max(2 * X, m));
    KahanSum acc;
    for (i64 n = X + 1; n <= 2 * X; ++n) {
        std::map<i64, std::pair<int, int>> exps;
        detail::factor_into(m, spf, exps, false);
        detail::factor_into(n, spf, exps, true);
        double a = 1.0;
        for (auto& [p, ab] : exps)
            a *= static_cast<double>((ab.first + 1) * (ab.second + 1) * (ab.first + ab.second + 2)) / 2.0;
        acc.add(a * a);
    }
    return acc.value();
}

}  // namespace scslab
