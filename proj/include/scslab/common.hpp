// common.hpp
//
// Shared basics: integer typedefs, error types, the certified exponential-sum
// value, compensated summation, a deterministic block-parallel runner, and a
// seedable RNG helper used by all sampled scans.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace scslab {

using i64 = long long;
using u64 = unsigned long long;
using i128 = __int128_t;
using u128 = unsigned __int128;
using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors. One type per named failure mode; preconditions that are plain
// caller bugs throw std::invalid_argument instead.
// ---------------------------------------------------------------------------

struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};
struct NonCoprimeModuli : std::domain_error {
    explicit NonCoprimeModuli(const std::string& what) : std::domain_error(what) {}
};
struct NonCoprimeScale : std::domain_error {
    explicit NonCoprimeScale(const std::string& what) : std::domain_error(what) {}
};
struct CapExceeded : std::domain_error {
    explicit CapExceeded(const std::string& what) : std::domain_error(what) {}
};
struct NotPrime : std::domain_error {
    explicit NotPrime(const std::string& what) : std::domain_error(what) {}
};
struct BadExponent : std::domain_error {
    explicit BadExponent(const std::string& what) : std::domain_error(what) {}
};
struct ZeroParameter : std::domain_error {
    explicit ZeroParameter(const std::string& what) : std::domain_error(what) {}
};
struct ModulusTooSmall : std::domain_error {
    explicit ModulusTooSmall(const std::string& what) : std::domain_error(what) {}
};

// ---------------------------------------------------------------------------
// ExpSumValue: a complex sum value plus an optional certified integer.
// Certification succeeds when the value sits within 1e-6*(1+|round|) of a
// rational integer in both components.
// ---------------------------------------------------------------------------

struct ExpSumValue {
    cplx value{0.0, 0.0};
    std::optional<i64> as_integer{};

    static constexpr double kCertifyTol = 1e-6;

    static ExpSumValue certify(cplx v) {
        ExpSumValue out;
        out.value = v;
        double r = std::round(v.real());
        if (std::abs(r) < 9.0e18) {
            double tol = kCertifyTol * (1.0 + std::abs(r));
            if (std::abs(v.real() - r) <= tol && std::abs(v.imag()) <= tol)
                out.as_integer = static_cast<i64>(r);
        }
        return out;
    }
};

// Neumaier-compensated accumulator; used for long floating sums so the result
// is insensitive to term count.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

inline i64 mod_reduce(i64 a, i64 q) {
    i64 r = a % q;
    return r < 0 ? r + q : r;
}

inline i64 gcd_ll(i64 a, i64 b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// ---------------------------------------------------------------------------
// Deterministic parallelism: work is cut into fixed-size blocks whose layout
// does not depend on the worker count; callers store per-block results and
// reduce sequentially, so any worker count gives identical output.
// ---------------------------------------------------------------------------

inline int default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(std::min(n, 64u));
}

template <typename Fn>
void parallel_blocks(i64 n_items, i64 block_size, int workers, Fn&& fn) {
    if (n_items <= 0) return;
    if (block_size <= 0) block_size = 1;
    const i64 n_blocks = (n_items + block_size - 1) / block_size;
    auto run_block = [&](i64 b) {
        fn(b, b * block_size, std::min(n_items, (b + 1) * block_size));
    };
    if (workers <= 1 || n_blocks == 1) {
        for (i64 b = 0; b < n_blocks; ++b) run_block(b);
        return;
    }
    std::atomic<i64> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&] {
        try {
            for (;;) {
                i64 b = next.fetch_add(1);
                if (b >= n_blocks) break;
                run_block(b);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!err) err = std::current_exception();
        }
    };
    int nt = static_cast<int>(std::min<i64>(workers, n_blocks));
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

// splitmix64; sampling never goes through std::uniform_int_distribution so
// sequences are identical across standard libraries.
struct Rng {
    u64 state;

    explicit Rng(u64 seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}

    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    i64 below(i64 n) { return n <= 1 ? 0 : static_cast<i64>(next() % static_cast<u64>(n)); }
    // uniform in [lo, hi]
    i64 between(i64 lo, i64 hi) { return lo + below(hi - lo + 1); }
};

inline double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    size_t n = xs.size();
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0) return std::numeric_limits<double>::quiet_NaN();
    return sxy / sxx;
}

}  // namespace scslab
