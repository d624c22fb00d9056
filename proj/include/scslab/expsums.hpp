// expsums.hpp
//
// Complete exponential sums over units: Kloosterman sums S(a,b;q), Ramanujan
// sums c_q(n), Weil-bound certification, and the twisted-multiplicativity and
// scaling identities. Evaluation is always the O(q) defining sum; the scans
// batch it but never replace it with closed-form shortcuts.

#pragma once

#include <map>
#include <memory>

#include "scslab/modarith.hpp"

namespace scslab {

// S(a,b;q) = sum over units x mod q of e((a*x + b*inv(x))/q). S(a,b;1) = 1
// (single residue, empty phase).
inline ExpSumValue kloosterman(i64 a, i64 b, i64 q) {
    if (q < 1) throw std::invalid_argument("kloosterman: q must be >= 1");
    if (q == 1) return ExpSumValue::certify(cplx{1.0, 0.0});
    RootTable roots(q);
    auto inv = unit_inverse_table(q);
    i64 ar = mod_reduce(a, q), br = mod_reduce(b, q);
    cplx acc = 0.0;
    for (i64 x = 1; x < q; ++x) {
        if (inv[static_cast<size_t>(x)] < 0) continue;
        i64 idx = (ar * x + br * inv[static_cast<size_t>(x)]) % q;
        acc += roots.data()[idx];
    }
    return ExpSumValue::certify(acc);
}

// Row of real Kloosterman values: row[a] = S(a, b; q) for a = 0..q-1.
// Kloosterman sums are real (x -> -x pairs conjugate terms), so only the real
// part is kept. Cost O(q*phi(q)).
inline std::vector<double> kloosterman_row(i64 b, i64 q, const RootTable& roots,
                                           const std::vector<i64>& inv) {
    std::vector<double> row(static_cast<size_t>(q), 0.0);
    if (q == 1) {
        row[0] = 1.0;
        return row;
    }
    i64 br = mod_reduce(b, q);
    const cplx* rt = roots.data();
    for (i64 x = 1; x < q; ++x) {
        i64 xin = inv[static_cast<size_t>(x)];
        if (xin < 0) continue;
        i64 idx = (br * xin) % q;  // phase at a = 0, then step by x
        for (i64 a = 0; a < q; ++a) {
            row[static_cast<size_t>(a)] += rt[idx].real();
            idx += x;
            if (idx >= q) idx -= q;
        }
    }
    return row;
}

inline std::vector<double> kloosterman_row(i64 b, i64 q) {
    RootTable roots(q);
    auto inv = unit_inverse_table(q);
    return kloosterman_row(b, q, roots, inv);
}

// Memo for Kloosterman rows keyed by (q, b mod q); the character-sum
// evaluators hit the same few rows thousands of times, across two moduli at
// once (q/n1 and q/m1).
class KloostermanCache {
  public:
    const std::vector<double>& row(i64 b, i64 q) {
        auto& mod = mods_[q];
        if (!mod.roots) {
            mod.roots = std::make_unique<RootTable>(q);
            mod.inv = unit_inverse_table(q);
        }
        i64 br = mod_reduce(b, q);
        auto it = mod.rows.find(br);
        if (it == mod.rows.end())
            it = mod.rows.emplace(br, kloosterman_row(br, q, *mod.roots, mod.inv)).first;
        return it->second;
    }

    const RootTable& roots(i64 q) {
        auto& mod = mods_[q];
        if (!mod.roots) {
            mod.roots = std::make_unique<RootTable>(q);
            mod.inv = unit_inverse_table(q);
        }
        return *mod.roots;
    }

    const std::vector<i64>& inverses(i64 q) {
        roots(q);
        return mods_[q].inv;
    }

  private:
    struct ModEntry {
        std::unique_ptr<RootTable> roots;
        std::vector<i64> inv;
        std::map<i64, std::vector<double>> rows;
    };
    std::map<i64, ModEntry> mods_;
};

// c_q(n) = sum over units a mod q of e(a*n/q); always a rational integer.
inline ExpSumValue ramanujan_sum(i64 q, i64 n) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
    if (q == 1) return ExpSumValue::certify(cplx{1.0, 0.0});
    RootTable roots(q);
    i64 step = mod_reduce(n, q);
    cplx acc = 0.0;
    for (i64 a = 1; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        acc += roots.data()[(a * step) % q];
    }
    return ExpSumValue::certify(acc);
}

// Exact c_{p^gamma}(n): p^gamma - p^(gamma-1) when p^gamma | n,
// -p^(gamma-1) when p^(gamma-1) || n, else 0.
inline i64 ramanujan_prime_power(i64 p, int gamma, i64 n) {
    i64 pg1 = 1;  // p^(gamma-1)
    for (int i = 0; i + 1 < gamma; ++i) pg1 *= p;
    i64 pg = pg1 * p;
    i64 r = mod_reduce(n, pg);
    if (r == 0) return pg - pg1;
    if (r % pg1 == 0) return -pg1;
    return 0;
}

struct WeilCertificate {
    ExpSumValue value;
    double bound = 0.0;
    bool ok = false;
};

// Checks |S(a,b;q)| <= d(q) * sqrt(gcd(a,b,q)) * sqrt(q) and returns both
// sides.
inline WeilCertificate weil_certify(i64 a, i64 b, i64 q) {
    WeilCertificate cert;
    cert.value = kloosterman(a, b, q);
    i64 g = std::gcd(std::gcd(mod_reduce(a, q), mod_reduce(b, q)), q);  // = q when both vanish
    cert.bound = static_cast<double>(divisor_count(q)) * std::sqrt(static_cast<double>(g)) *
                 std::sqrt(static_cast<double>(q));
    cert.ok = std::abs(cert.value.value) <= cert.bound + 1e-9;
    return cert;
}

namespace detail {
inline bool close(cplx a, cplx b) {
    return std::abs(a - b) <= 1e-6 * (1.0 + std::max(std::abs(a), std::abs(b)));
}
}  // namespace detail

// S(a,b;q1*q2) = S(a*inv(q2), b*inv(q2); q1) * S(a*inv(q1), b*inv(q1); q2)
// for coprime q1, q2 (inverses taken mod the other factor).
inline bool twisted_multiplicativity_check(i64 a, i64 b, i64 q1, i64 q2) {
    if (q1 < 1 || q2 < 1) throw std::invalid_argument("moduli must be >= 1");
    if (std::gcd(q1, q2) != 1)
        throw NonCoprimeModuli("twisted_multiplicativity_check: gcd(q1,q2) != 1");
    cplx lhs = kloosterman(a, b, q1 * q2).value;
    i64 q2bar = (q1 == 1) ? 0 : mod_inverse(q2, q1);
    i64 q1bar = (q2 == 1) ? 0 : mod_inverse(q1, q2);
    cplx rhs = kloosterman(mod_reduce(a, q1) * q2bar, mod_reduce(b, q1) * q2bar, q1).value *
               kloosterman(mod_reduce(a, q2) * q1bar, mod_reduce(b, q2) * q1bar, q2).value;
    return detail::close(lhs, rhs);
}

// S(a*m, b*m; q) = S(a*m^2, b; q) = S(a, b*m^2; q) for gcd(m,q) = 1.
inline bool scaling_identity_check(i64 a, i64 b, i64 m, i64 q) {
    if (q < 1) throw std::invalid_argument("scaling_identity_check: q must be >= 1");
    if (std::gcd(mod_reduce(m, q), q) != 1 && q != 1)
        throw NonCoprimeScale("scaling_identity_check: gcd(m,q) != 1");
    i64 mr = mod_reduce(m, q), ar = mod_reduce(a, q), br = mod_reduce(b, q);
    cplx s0 = kloosterman(ar * mr, br * mr, q).value;
    cplx s1 = kloosterman(ar * mr % q * mr, br, q).value;
    cplx s2 = kloosterman(ar, br * mr % q * mr, q).value;
    return detail::close(s0, s1) && detail::close(s0, s2);
}

}  // namespace scslab
