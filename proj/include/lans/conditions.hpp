#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace lans {

/// Parameter tuple (n, p, c, k, a, b, b') of the local-existence condition
/// lists; s' is definitional (s' = k - 2 - b + b' for the full lists,
/// s' = k - 1 - b for the simplified b' = 1 lists) and r = n/p + b.
struct LocalParamSet {
    double n = 3.0;
    double p = 2.0;
    double c = 2.0;
    double k = 1.0;
    double a = 0.25;
    double b = 0.0;
    double b_prime = 1.0;

    double r() const { return n / p + b; }
};

struct ConditionReport {
    bool pass = true;
    double s_prime = 0.0;
    std::vector<std::string> violated;

    void require(bool ok, const std::string& clause) {
        if (!ok) {
            pass = false;
            violated.push_back(clause);
        }
    }
};

namespace detail {

inline constexpr double cond_eps = 1e-12;

inline void check_pc(const LocalParamSet& ps, ConditionReport& rep) {
    rep.require(ps.p > 1.0 && ps.p <= ps.c && std::isfinite(ps.c), "1 < p <= c < inf");
}

/// 1 < nc/(2n - s'c) (<= p when bounded); evaluated via cross-multiplication
/// so a non-positive denominator counts as a violation rather than a sign flip.
inline void check_cbar(const LocalParamSet& ps, double sp, bool upper_bound, bool strict_lower,
                       ConditionReport& rep) {
    const double den = 2.0 * ps.n - sp * ps.c;
    const double num = ps.n * ps.c;
    if (strict_lower) {
        rep.require(den > 0.0 && num > den, "1 < nc/(2n - s'c)");
    } else {
        rep.require(den > 0.0 && num >= den, "1 <= nc/(2n - s'c)");
    }
    if (upper_bound) rep.require(den > 0.0 && num <= ps.p * den, "nc/(2n - s'c) <= p");
}

} // namespace detail

/// Hypothesis list for the weighted-sup contraction space, full form with the
/// free parameter b'.  strict_s_range selects the derivation's range
/// 0 <= s' <= k - 1 (default) over the printed 0 <= s' <= k.
inline ConditionReport check_conditions_ct_full(const LocalParamSet& ps,
                                                bool strict_s_range = true) {
    ConditionReport rep;
    const double sp = ps.k - 2.0 - ps.b + ps.b_prime;
    rep.s_prime = sp;

    detail::check_pc(ps, rep);
    rep.require(ps.k >= 0.0, "k >= 0");
    rep.require(ps.b_prime >= 1.0, "b' >= 1");
    rep.require(sp * ps.c < ps.n, "s'c < n");
    const double gap = ps.k - ps.n / ps.c - ps.b;
    rep.require(std::abs(2.0 * ps.a - gap) <= detail::cond_eps, "2a = k - n/c - b");
    rep.require(gap > 0.0 && gap < 1.0, "0 < k - n/c - b < 1");
    if (strict_s_range) {
        rep.require(sp >= 0.0 && sp <= ps.k - 1.0, "0 <= s' <= k - 1");
    } else {
        rep.require(sp >= 0.0 && sp <= ps.k, "0 <= s' <= k");
    }
    detail::check_cbar(ps, sp, true, true, rep);
    rep.require(ps.b_prime - ps.b <= 1.0, "1 >= b' - b");
    const double q = ps.b_prime + ps.n / ps.c - sp;
    rep.require(q >= 1.0 && q < 2.0, "1 <= b' + n/c - s' < 2");
    const double np = ps.n / ps.p;
    rep.require(2.0 - 2.0 * ps.b_prime + sp <= np && np <= 2.0 - ps.b_prime + sp,
                "2 - 2b' + s' <= n/p <= 2 - b' + s'");
    return rep;
}

/// Simplified (b' = 1) form of the weighted-sup list, with the range clause
/// on s' carried over so the two forms agree pointwise at b' = 1.
inline ConditionReport check_conditions_ct_simplified(const LocalParamSet& ps) {
    ConditionReport rep;
    const double sp = ps.k - 1.0 - ps.b;
    rep.s_prime = sp;

    detail::check_pc(ps, rep);
    rep.require(ps.b >= 0.0, "b >= 0");
    rep.require(ps.k >= 1.0, "k >= 1");
    rep.require(sp * ps.c < ps.n, "s'c < n");
    const double gap = ps.k - ps.n / ps.c - ps.b;
    rep.require(std::abs(2.0 * ps.a - gap) <= detail::cond_eps, "2a = k - n/c - b");
    rep.require(gap > 0.0 && gap < 1.0, "0 < k - n/c - b < 1");
    rep.require(sp >= 0.0, "0 <= s'");
    detail::check_cbar(ps, sp, true, true, rep);
    const double q = ps.n / ps.c - sp;
    rep.require(q >= 0.0 && q < 1.0, "0 <= n/c - s' < 1");
    const double np = ps.n / ps.p;
    rep.require(sp <= np && np <= 1.0 + sp, "s' <= n/p <= 1 + s'");
    return rep;
}

inline ConditionReport check_conditions_ct(const LocalParamSet& ps, bool simplified,
                                           bool strict_s_range = true) {
    return simplified ? check_conditions_ct_simplified(ps)
                      : check_conditions_ct_full(ps, strict_s_range);
}

/// Hypothesis list for the L^a-in-time contraction space, full form.  The
/// lower bound on nc/(2n - s'c) is non-strict and carries no upper bound,
/// exactly as printed.
inline ConditionReport check_conditions_la_full(const LocalParamSet& ps) {
    ConditionReport rep;
    const double sp = ps.k - 2.0 + ps.b_prime - ps.b;
    rep.s_prime = sp;

    detail::check_pc(ps, rep);
    rep.require(ps.k >= 1.0, "k >= 1");
    rep.require(ps.b_prime >= 1.0, "b' >= 1");
    rep.require(sp * ps.c < ps.n, "s'c < n");
    const double gap = ps.k - ps.n / ps.c - ps.b;
    rep.require(ps.a > 0.0 && std::abs(2.0 / ps.a - gap) <= detail::cond_eps,
                "2/a = k - n/c - b");
    rep.require(gap > 0.0 && gap < 1.0, "0 < k - n/c - b < 1");
    rep.require(sp >= 0.0 && sp <= ps.k - 1.0, "0 <= s' <= k - 1");
    detail::check_cbar(ps, sp, false, false, rep);
    rep.require(ps.b_prime - ps.b <= 1.0, "1 >= b' - b");
    const double rr = ps.n / ps.p + ps.b;
    rep.require(ps.k - ps.b_prime <= rr && rr <= ps.k, "k - b' <= n/p + b <= k");
    rep.require(ps.a / 2.0 <= ps.p && ps.p <= ps.a, "a/2 <= p <= a");
    return rep;
}

/// Simplified (b' = 1) L^a list, with the s' range and nc/(2n - s'c) clauses
/// carried over so the two forms agree pointwise at b' = 1.
inline ConditionReport check_conditions_la_simplified(const LocalParamSet& ps) {
    ConditionReport rep;
    const double sp = ps.k - 1.0 - ps.b;
    rep.s_prime = sp;

    detail::check_pc(ps, rep);
    rep.require(ps.b >= 0.0, "b >= 0");
    rep.require(ps.k >= 1.0, "k >= 1");
    rep.require(sp * ps.c < ps.n, "s'c < n");
    const double gap = ps.k - ps.n / ps.c - ps.b;
    rep.require(ps.a > 0.0 && std::abs(2.0 / ps.a - gap) <= detail::cond_eps,
                "2/a = k - n/c - b");
    rep.require(gap > 0.0 && gap < 1.0, "0 < k - n/c - b < 1");
    rep.require(sp >= 0.0, "0 <= s'");
    detail::check_cbar(ps, sp, false, false, rep);
    const double rr = ps.n / ps.p + ps.b;
    rep.require(ps.k - 1.0 <= rr && rr <= ps.k, "k - 1 <= n/p + b <= k");
    rep.require(ps.a / 2.0 <= ps.p && ps.p <= ps.a, "a/2 <= p <= a");
    return rep;
}

inline ConditionReport check_conditions_la(const LocalParamSet& ps, bool simplified) {
    return simplified ? check_conditions_la_simplified(ps) : check_conditions_la_full(ps);
}

} // namespace lans
