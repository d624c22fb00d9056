// scs.hpp
//
// Direct evaluation of the shifted convolution sums
//
//   D(H,X) = (1/H) sum_h lambda(h) W1(h/H) sum_n a(n) b(n+h) W2(n/X)
//   L(H,X) = the same with constant h-weight,
//
// the finite-orthogonality delta cross-check (one large modulus Q0 replacing
// the analytic delta expansion), the Cauchy-Schwarz envelope, and the
// exponent scan over (X, H = X^theta) grids.

#pragma once

#include "scslab/coeffs.hpp"

namespace scslab {

// Smooth bump supported on (1,2), normalized to peak 1 at t = 3/2:
// exp(4 - 1/((t-1)(2-t))).
inline double bump(double t) {
    if (t <= 1.0 || t >= 2.0) return 0.0;
    return std::exp(4.0 - 1.0 / ((t - 1.0) * (2.0 - t)));
}

// Weight on [1,2]: the smooth bump (optionally scaled) or the sharp indicator
// of (1,2] used by degenerate count checks.
struct Weight {
    enum class Kind { bump, indicator };
    Kind kind = Kind::bump;
    double scale = 1.0;

    double operator()(double t) const {
        if (kind == Kind::indicator) return (t > 1.0 && t <= 2.0) ? scale : 0.0;
        return scale * bump(t);
    }
    static Weight smooth(double scale = 1.0) { return Weight{Kind::bump, scale}; }
    static Weight sharp(double scale = 1.0) { return Weight{Kind::indicator, scale}; }
};

enum class HWeight { tau_normalized, constant };

struct SCSConfig {
    i64 X = 1;
    i64 H = 1;
    Weight w1 = Weight::smooth();
    Weight w2 = Weight::smooth();
    const CoefficientSeries* series_a = nullptr;
    const CoefficientSeries* series_b = nullptr;
    HWeight hweight = HWeight::constant;
    const CoefficientSeries* hseries = nullptr;  // tau series when hweight = tau_normalized

    void validate() const {
        if (X < 1 || H < 1 || H > X)
            throw std::invalid_argument("SCSConfig: need 1 <= H <= X");
        if (!series_a || !series_b) throw std::invalid_argument("SCSConfig: missing series");
        i64 need = 2 * X + 4 * H;
        if (series_a->limit() < need || series_b->limit() < need)
            throw CapExceeded("SCSConfig: series caches must cover 2X+4H = " + std::to_string(need));
        if (hweight == HWeight::tau_normalized) {
            if (!hseries) throw std::invalid_argument("SCSConfig: tau h-weight needs hseries");
            if (hseries->limit() < 2 * H)
                throw CapExceeded("SCSConfig: h-weight cache must cover 2H");
        }
    }

    double hvalue(i64 h) const {
        return hweight == HWeight::constant ? 1.0 : hseries->a1(h);
    }
};

namespace detail {

// The (h,n) double sum, partitioned into fixed-size h-blocks whose partial
// sums are reduced in block order; identical output for any worker count.
template <typename PerH>
double scs_blocked_sum(const SCSConfig& cfg, int workers, PerH&& per_h) {
    const i64 hmax = 2 * cfg.H;
    const i64 block = 64;
    const i64 n_blocks = (hmax + block - 1) / block;
    std::vector<double> partial(static_cast<size_t>(n_blocks), 0.0);
    parallel_blocks(hmax, block, workers, [&](i64 b, i64 begin, i64 end) {
        KahanSum acc;
        for (i64 h = begin + 1; h <= end; ++h) {
            double w1 = cfg.w1(static_cast<double>(h) / static_cast<double>(cfg.H));
            if (w1 == 0.0) continue;
            acc.add(w1 * cfg.hvalue(h) * per_h(h));
        }
        partial[static_cast<size_t>(b)] = acc.value();
    });
    KahanSum total;
    for (double v : partial) total.add(v);
    return total.value() / static_cast<double>(cfg.H);
}

}  // namespace detail

// D(H,X); the weights vanish outside h in (H,2H) and n in (X,2X).
inline double scs_D(const SCSConfig& cfg, int workers = 1) {
    cfg.validate();
    return detail::scs_blocked_sum(cfg, workers, [&](i64 h) {
        KahanSum inner;
        for (i64 n = cfg.X + 1; n <= 2 * cfg.X; ++n) {
            double w2 = cfg.w2(static_cast<double>(n) / static_cast<double>(cfg.X));
            if (w2 == 0.0) continue;
            inner.add(cfg.series_a->a1(n) * cfg.series_b->a1(n + h) * w2);
        }
        return inner.value();
    });
}

// L(H,X) = D with constant h-weight.
inline double scs_L(const SCSConfig& cfg, int workers = 1) {
    SCSConfig c = cfg;
    c.hweight = HWeight::constant;
    return scs_D(c, workers);
}

// Cross-check of L through the exact finite orthogonality
//   delta(n+h = m) = (1/Q0) sum_{alpha mod Q0} e(alpha(n+h-m)/Q0),
// valid once Q0 > 2X+4H. The triple sum regroups as
//   (1/(H*Q0)) sum_alpha S_h(alpha) S_n(alpha) S_m(alpha)
// with m running over the integers in (Y, 2Y], Y = X+H.
inline bool delta_crosscheck(const SCSConfig& cfg, i64 Q0) {
    cfg.validate();
    if (Q0 <= 2 * cfg.X + 4 * cfg.H)
        throw ModulusTooSmall("delta_crosscheck: need Q0 > 2X+4H = " +
                              std::to_string(2 * cfg.X + 4 * cfg.H));
    const i64 Y = cfg.X + cfg.H;
    RootTable roots(Q0);
    KahanSum acc_re;
    for (i64 alpha = 0; alpha < Q0; ++alpha) {
        cplx sh = 0.0, sn = 0.0, sm = 0.0;
        for (i64 h = 1; h <= 2 * cfg.H; ++h) {
            double w = cfg.w1(static_cast<double>(h) / static_cast<double>(cfg.H));
            if (w != 0.0) sh += w * roots(alpha * h);
        }
        for (i64 n = cfg.X + 1; n <= 2 * cfg.X; ++n) {
            double w = cfg.w2(static_cast<double>(n) / static_cast<double>(cfg.X));
            if (w != 0.0) sn += cfg.series_a->a1(n) * w * roots(alpha * n);
        }
        for (i64 m = Y + 1; m <= 2 * Y; ++m) sm += cfg.series_b->a1(m) * roots(-alpha * m);
        acc_re.add((sh * sn * sm).real());
    }
    double via_delta = acc_re.value() / (static_cast<double>(cfg.H) * static_cast<double>(Q0));
    double direct = scs_L(cfg);
    return std::abs(via_delta - direct) <= 1e-6 * (1.0 + std::max(std::abs(via_delta), std::abs(direct)));
}

struct TrivialBoundReport {
    double value = 0.0;
    double envelope = 0.0;
    double ratio = 0.0;
};

// Cauchy-Schwarz envelope per h:
//   |sum_n a(n) b(n+h) W2| <= sqrt(sum a(n)^2 W2) sqrt(sum b(n+h)^2 W2),
// summed with |lambda(h)| W1 weights. The ratio |D|/envelope is at most 1.
inline TrivialBoundReport trivial_bound_report(const SCSConfig& cfg, int workers = 1) {
    cfg.validate();
    TrivialBoundReport rep;
    rep.value = scs_D(cfg, workers);
    KahanSum env;
    for (i64 h = cfg.H + 1; h <= 2 * cfg.H; ++h) {
        double w1 = cfg.w1(static_cast<double>(h) / static_cast<double>(cfg.H));
        if (w1 == 0.0) continue;
        KahanSum sa, sb;
        for (i64 n = cfg.X + 1; n <= 2 * cfg.X; ++n) {
            double w2 = cfg.w2(static_cast<double>(n) / static_cast<double>(cfg.X));
            if (w2 == 0.0) continue;
            double a = cfg.series_a->a1(n), b = cfg.series_b->a1(n + h);
            sa.add(a * a * w2);
            sb.add(b * b * w2);
        }
        env.add(std::abs(w1 * cfg.hvalue(h)) * std::sqrt(sa.value()) * std::sqrt(sb.value()));
    }
    rep.envelope = env.value() / static_cast<double>(cfg.H);
    rep.ratio = rep.envelope > 0.0 ? std::abs(rep.value) / rep.envelope : 0.0;
    return rep;
}

struct ScanRow {
    i64 X = 0;
    i64 H = 0;
    double theta = 0.0;
    double value = 0.0;
    double envelope = 0.0;
    double ratio = 0.0;
    double slope = std::numeric_limits<double>::quiet_NaN();
};

// For each theta and X in the grids: H = ceil(X^theta) clamped to [1, X],
// D(H,X) with its envelope, and per-theta least-squares slopes of log|D|
// against log X. Record-only output.
inline std::vector<ScanRow> exponent_scan(const std::vector<i64>& x_grid,
                                          const std::vector<double>& theta_grid,
                                          CoefficientSeries::Kind kind_a, int ka,
                                          CoefficientSeries::Kind kind_b, int kb,
                                          HWeight hweight, int workers = 1) {
    auto make_series = [](CoefficientSeries::Kind kind, int k, i64 limit) {
        switch (kind) {
            case CoefficientSeries::Kind::divisor: return CoefficientSeries::divisor(k, limit);
            case CoefficientSeries::Kind::gl3_eisenstein: return CoefficientSeries::gl3(limit);
            case CoefficientSeries::Kind::tau_normalized: return CoefficientSeries::tau(limit);
            case CoefficientSeries::Kind::custom: break;
        }
        throw std::invalid_argument("exponent_scan: named series kinds only");
    };

    std::vector<ScanRow> rows;
    for (i64 X : x_grid) {
        i64 hmax = 1;
        for (double theta : theta_grid)
            hmax = std::max(hmax, static_cast<i64>(std::ceil(std::pow(static_cast<double>(X), theta))));
        hmax = std::min(hmax, X);
        const i64 limit = 2 * X + 4 * hmax;
        auto sa = make_series(kind_a, ka, limit);
        auto sb = make_series(kind_b, kb, limit);
        std::optional<CoefficientSeries> hs;
        if (hweight == HWeight::tau_normalized) hs.emplace(CoefficientSeries::tau(2 * hmax));
        for (double theta : theta_grid) {
            ScanRow row;
            row.X = X;
            row.theta = theta;
            row.H = std::clamp<i64>(static_cast<i64>(std::ceil(std::pow(static_cast<double>(X), theta))), 1, X);
            SCSConfig cfg;
            cfg.X = X;
            cfg.H = row.H;
            cfg.series_a = &sa;
            cfg.series_b = &sb;
            cfg.hweight = hweight;
            cfg.hseries = hs ? &*hs : nullptr;
            auto rep = trivial_bound_report(cfg, workers);
            row.value = rep.value;
            row.envelope = rep.envelope;
            row.ratio = rep.ratio;
            rows.push_back(row);
        }
    }
    // per-theta regression of log|value| on log X
    for (double theta : theta_grid) {
        std::vector<double> lx, ly;
        for (const auto& r : rows)
            if (r.theta == theta && std::abs(r.value) > 0.0) {
                lx.push_back(std::log(static_cast<double>(r.X)));
                ly.push_back(std::log(std::abs(r.value)));
            }
        double slope = least_squares_slope(lx, ly);
        for (auto& r : rows)
            if (r.theta == theta) r.slope = slope;
    }
    return rows;
}

}  // namespace scslab
