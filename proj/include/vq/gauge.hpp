#pragma once
// Gauge transformations: moving a linear factor between the g(x/q) and g(qx)
// coefficients by multiplying the solution with an infinite-product factor,
// and the two cross-family equation correspondences built from it.

#include <string>

#include "vq/catalog.hpp"
#include "vq/equations.hpp"
#include "vq/qalg.hpp"

namespace vq {

enum class GaugeDirection { ATTACH, DETACH };
enum class GaugeSide { A_SIDE, C_SIDE };

struct GaugeFactor {
    Rat alpha;
    GaugeDirection direction;
};

namespace detail {

// Exact division of p by (1 - alpha x); throws if not divisible.
inline Lp divide_linear(const Lp& p, const Rat& alpha, const char* which) {
    if (p.is_zero()) return p;
    // synthetic division from the top degree down
    Lp q;
    Lp rem = p;
    int hi = rem.max_deg();
    int lo = rem.min_deg();
    for (int k = hi; k > lo; --k) {
        Rat ck = rem.coeff(k);
        if (ck == 0) continue;
        // eliminate the x^k term with the quotient term (-ck/alpha) x^{k-1}
        Rat t = -ck / alpha;
        q.add_term(k - 1, t);
        rem.add_term(k, -ck);
        rem.add_term(k - 1, -t);
    }
    if (!rem.is_zero())
        throw std::invalid_argument(std::string("gauge_equation: (1 - alpha x) does not divide ") +
                                    which);
    return q;
}

}  // namespace detail

// A-side: requires (1 - alpha x) | A; returns (A/(1-alpha x), B, (1-alpha q x) C).
// C-side: requires (1 - alpha x) | C; returns ((1-alpha x/q) A, B, C/(1-alpha x)).
inline Op gauge_equation(const Op& op, const Rat& alpha, GaugeSide side, const Rat& q) {
    if (alpha == 0) throw std::invalid_argument("gauge_equation: alpha = 0");
    if (side == GaugeSide::A_SIDE) {
        Lp A2 = detail::divide_linear(op.A, alpha, "A");
        Lp C2 = op.C * Lp::linear(Rat(1), -alpha * q);
        return {A2, op.B, C2};
    }
    Lp A2 = op.A * Lp::linear(Rat(1), -alpha / q);
    Lp C2 = detail::divide_linear(op.C, alpha, "C");
    return {A2, op.B, C2};
}

// Series-level gauge: multiplies a monomial-basis expansion by the Euler
// expansion of the gauge factor, truncated at N. Refused for descending
// series, whose monomial content is not a formal power series.
inline Lp gauge_series(const Lp& mono_series, const GaugeFactor& gf, const Rat& q, int N) {
    if (gf.alpha == 0) throw std::invalid_argument("gauge_series: alpha = 0");
    if (!mono_series.is_zero() && mono_series.min_deg() < 0)
        throw std::invalid_argument("gauge_series: descending series refused");
    Lp factor = (gf.direction == GaugeDirection::ATTACH)
                    ? euler_expand(gf.alpha * q, q, N)  // (alpha q x; q)_inf
                    : inv_euler_expand(gf.alpha, q, N); // 1/(alpha x; q)_inf
    return poly_clip(mono_series * factor, 0, N);
}

namespace detail {

inline bool op_equal_scaled(const Op& a, const Op& b, const Rat& scalar) {
    return a.A == poly_scale(b.A, scalar) && a.B == poly_scale(b.B, scalar) &&
           a.C == poly_scale(b.C, scalar);
}

// Ratio of the leading coefficients of the g(x/q) terms.
inline Rat leading_ratio(const Op& a, const Op& b) {
    return a.A.coeff(a.A.max_deg()) / b.A.coeff(b.A.max_deg());
}

}  // namespace detail

// Correspondence between the type (1,2) and type (2,1) families: one A-side
// gauge move at alpha = 1/(A2 s t2) turns the C12 operator into the C21
// operator at the tilde parameters
//   tilde L1 = L1, tilde L2 = A2, tilde A1 = A1,
//   tilde a1 * a1 = q A1/(L1 Lam^2),
// up to an overall scalar.
inline bool check_correspondence_C12_C21(const ParamSet& p) {
    if (p.family != Family::C12) throw std::invalid_argument("expected C12 params");
    Op op = build_operator(p);
    Rat alpha = Rat(1) / (*p.A2 * p.s * p.t2);
    Op gop = gauge_equation(op, alpha, GaugeSide::A_SIDE, p.q);

    ParamSet pt;
    pt.family = Family::C21;
    pt.q = p.q;
    pt.s = p.s;
    pt.t1 = p.t1;
    pt.t2 = p.t2;
    pt.A1 = p.A1;
    pt.L1 = p.L1;
    pt.L2 = p.A2;
    pt.Lam = p.Lam;
    pt.a1 = p.q * *p.A1 / (*p.L1 * *p.Lam * *p.Lam * *p.a1);
    Op top = build_operator(pt);
    return detail::op_equal_scaled(gop, top, detail::leading_ratio(gop, top));
}

// Correspondence between the type (0,2) and type (2,0) families: two A-side
// gauge moves at alpha = 1/(A1 s t1) and 1/(A2 s t2), with
//   tilde L1 = A1, tilde L2 = A2, tilde a1 * a1 = q/Lam^2.
inline bool check_correspondence_B02_B20(const ParamSet& p) {
    if (p.family != Family::B02) throw std::invalid_argument("expected B02 params");
    Op op = build_operator(p);
    Op gop = gauge_equation(op, Rat(1) / (*p.A1 * p.s * p.t1), GaugeSide::A_SIDE, p.q);
    gop = gauge_equation(gop, Rat(1) / (*p.A2 * p.s * p.t2), GaugeSide::A_SIDE, p.q);

    ParamSet pt;
    pt.family = Family::B20;
    pt.q = p.q;
    pt.s = p.s;
    pt.t1 = p.t1;
    pt.t2 = p.t2;
    pt.L1 = p.A1;
    pt.L2 = p.A2;
    pt.Lam = p.Lam;
    pt.a1 = p.q / (*p.Lam * *p.Lam * *p.a1);
    Op top = build_operator(pt);
    return detail::op_equal_scaled(gop, top, detail::leading_ratio(gop, top));
}

// Parameter-map composition for the (1,2) <-> (2,1) correspondence; applying
// the map twice is the identity.
inline ParamSet correspondence_param_map_C12_C21_roundtrip(const ParamSet& p) {
    ParamSet pt = p;
    // tilde a1 a1 = q A1/(L1 Lam^2) is an involution with L1, A1, Lam fixed
    pt.a1 = p.q * *p.A1 / (*p.L1 * *p.Lam * *p.Lam * *p.a1);
    ParamSet back = pt;
    back.a1 = pt.q * *pt.A1 / (*pt.L1 * *pt.Lam * *pt.Lam * *pt.a1);
    return back;
}

}  // namespace vq
