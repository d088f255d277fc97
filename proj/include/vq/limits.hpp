#pragma once
// The two kinds of limits connecting the five families:
//   1. confluence degenerations that send one generator (or its reciprocal)
//      to zero, checked exactly over rational functions of the vanishing
//      variable u;
//   2. continuum limits q -> 1, checked as exact epsilon-Taylor expansions of
//      the operators and as exact coefficient-convergence tables against the
//      classical confluent-hypergeometric and parabolic-cylinder series.

#include <string>
#include <vector>

#include "vq/basis.hpp"
#include "vq/catalog.hpp"
#include "vq/equations.hpp"
#include "vq/qalg.hpp"
#include "vq/ratfunc.hpp"
#include "vq/tseries.hpp"

namespace vq {

// ---------------------------------------------------------------------------
// Degeneration arrows
// ---------------------------------------------------------------------------

enum class Arrow { D2_C12, C12_B02, D2_C21, C21_B20 };

inline std::string arrow_name(Arrow a) {
    switch (a) {
        case Arrow::D2_C12: return "D2-C12";
        case Arrow::C12_B02: return "C12-B02";
        case Arrow::D2_C21: return "D2-C21";
        case Arrow::C21_B20: return "C21-B20";
    }
    throw std::logic_error("unreachable");
}

inline std::optional<Arrow> parse_arrow(const std::string& s) {
    for (Arrow a : {Arrow::D2_C12, Arrow::C12_B02, Arrow::D2_C21, Arrow::C21_B20})
        if (s == arrow_name(a)) return a;
    return std::nullopt;
}

inline Family arrow_source(Arrow a) {
    switch (a) {
        case Arrow::D2_C12:
        case Arrow::D2_C21: return Family::D2;
        case Arrow::C12_B02: return Family::C12;
        case Arrow::C21_B20: return Family::C21;
    }
    throw std::logic_error("unreachable");
}

inline Family arrow_target(Arrow a) {
    switch (a) {
        case Arrow::D2_C12: return Family::C12;
        case Arrow::C12_B02: return Family::B02;
        case Arrow::D2_C21: return Family::C21;
        case Arrow::C21_B20: return Family::B20;
    }
    throw std::logic_error("unreachable");
}

namespace detail {

inline GenVals<RatFunc> lift_gen_vals(const GenVals<Rat>& c, Arrow arrow) {
    GenVals<RatFunc> g;
    g.q = RatFunc(c.q);
    g.s = RatFunc(c.s);
    g.t1 = RatFunc(c.t1);
    g.t2 = RatFunc(c.t2);
    g.A1 = RatFunc(c.A1);
    g.A2 = RatFunc(c.A2);
    g.L1 = RatFunc(c.L1);
    g.L2 = RatFunc(c.L2);
    g.a1 = RatFunc(c.a1);
    g.a2 = RatFunc(c.a2);
    g.Lam = RatFunc(c.Lam);
    RatFunc u = RatFunc::var();
    switch (arrow) {
        case Arrow::D2_C12:
            // the combination Lam^2 L1 L2 a1 a2 = q A1 A2 stays fixed
            g.a2 = u;
            g.L2 = RatFunc(c.q * c.A1 * c.A2 / (c.L1 * c.a1 * c.Lam * c.Lam)) / u;
            break;
        case Arrow::C12_B02:
            g.L1 = RatFunc(1) / u;
            break;
        case Arrow::D2_C21:
            g.a2 = RatFunc(1) / u;
            g.A2 = RatFunc(c.L1 * c.L2 * c.a1 * c.Lam * c.Lam / (c.q * c.A1)) / u;
            break;
        case Arrow::C21_B20:
            g.A1 = RatFunc(1) / u;
            break;
    }
    return g;
}

// Overall factor applied to the rewritten source operator so that its
// coefficients become polynomial in u.
inline RatFunc arrow_multiplier(Arrow arrow, const GenVals<Rat>& c) {
    if (arrow == Arrow::D2_C21) return RatFunc::var() / RatFunc(c.a1);
    return RatFunc(1);
}

// Scalar relating the u = 0 value to the target-family operator.
inline Rat arrow_scalar(Arrow arrow, const GenVals<Rat>& c) {
    switch (arrow) {
        case Arrow::C12_B02: return c.A1 * c.A2 * c.t1 * c.t2 / (c.Lam * c.Lam);
        case Arrow::C21_B20: return c.L1 * c.L2 * c.Lam * c.Lam * c.t1 * c.t2;
        default: return Rat(1);
    }
}

inline GenVals<Rat> eval_gen_vals(const GenVals<RatFunc>& g, const Rat& u0) {
    GenVals<Rat> r;
    r.q = g.q.eval(u0);
    r.s = g.s.eval(u0);
    r.t1 = g.t1.eval(u0);
    r.t2 = g.t2.eval(u0);
    r.A1 = g.A1.eval(u0);
    r.A2 = g.A2.eval(u0);
    r.L1 = g.L1.eval(u0);
    r.L2 = g.L2.eval(u0);
    r.a1 = g.a1.eval(u0);
    r.a2 = g.a2.eval(u0);
    r.Lam = g.Lam.eval(u0);
    return r;
}

inline Lp poly_eval_u(const LPoly<RatFunc>& p, const Rat& u0) {
    Lp r;
    for (auto& [k, v] : p.c) r.add_term(k, v.eval(u0));
    return r;
}

inline Lp poly_at_zero(const LPoly<RatFunc>& p) {
    Lp r;
    for (auto& [k, v] : p.c) r.add_term(k, v.at_zero());
    return r;
}

inline bool poly_is_polynomial_u(const LPoly<RatFunc>& p) {
    for (auto& [k, v] : p.c)
        if (!v.is_polynomial()) return false;
    return true;
}

}  // namespace detail

struct DegenerationResult {
    bool rewrite_ok = false;     // evaluation at u0 matches a direct build
    bool polynomial_ok = false;  // rewritten coefficients are polynomial in u
    bool limit_ok = false;       // u = 0 equals scalar * target operator
    bool ok() const { return rewrite_ok && polynomial_ok && limit_ok; }
};

// Three exact checks for one confluence arrow on a target-family parameter
// draw: sample-point consistency of the rewrite, polynomiality in the
// vanishing variable, and the u = 0 identity after scalar normalization.
inline DegenerationResult degeneration_check(Arrow arrow, const ParamSet& target_params,
                                             const Rat& u0 = Rat(1, 7)) {
    if (target_params.family != arrow_target(arrow))
        throw std::invalid_argument("degeneration_check: params are not for the target family");
    if (u0 == 0) throw std::invalid_argument("degeneration_check: u0 must be nonzero");
    GenVals<Rat> c = gen_vals(target_params);
    GenVals<RatFunc> lifted = detail::lift_gen_vals(c, arrow);
    RatFunc mult = detail::arrow_multiplier(arrow, c);
    Operator<RatFunc> op = build_operator(arrow_source(arrow), lifted);
    op.A = poly_scale(op.A, mult);
    op.B = poly_scale(op.B, mult);
    op.C = poly_scale(op.C, mult);

    DegenerationResult res;

    Op direct = build_operator(arrow_source(arrow), detail::eval_gen_vals(lifted, u0));
    Rat m0 = mult.eval(u0);
    res.rewrite_ok = detail::poly_eval_u(op.A, u0) == poly_scale(direct.A, m0) &&
                     detail::poly_eval_u(op.B, u0) == poly_scale(direct.B, m0) &&
                     detail::poly_eval_u(op.C, u0) == poly_scale(direct.C, m0);

    res.polynomial_ok = detail::poly_is_polynomial_u(op.A) &&
                        detail::poly_is_polynomial_u(op.B) &&
                        detail::poly_is_polynomial_u(op.C);

    Op tgt = build_operator(arrow_target(arrow), c);
    Rat sc = detail::arrow_scalar(arrow, c);
    res.limit_ok = detail::poly_at_zero(op.A) == poly_scale(tgt.A, sc) &&
                   detail::poly_at_zero(op.B) == poly_scale(tgt.B, sc) &&
                   detail::poly_at_zero(op.C) == poly_scale(tgt.C, sc);
    return res;
}

// ---------------------------------------------------------------------------
// Confluence of coefficient formulas (solution-level limits)
// ---------------------------------------------------------------------------

struct ConfluencePair {
    Arrow arrow;
    SolutionId parent;
    SolutionId child;
};

inline const std::vector<ConfluencePair>& confluence_pairs() {
    using A = Arrow;
    static const std::vector<ConfluencePair> pairs = {
        {A::D2_C12, {Family::D2, "P21-i", 0}, {Family::C12, "T31-i", 0}},
        {A::D2_C12, {Family::D2, "P21-ii", 1}, {Family::C12, "T31-ii", 0}},
        {A::D2_C12, {Family::D2, "P21-iii", 1}, {Family::C12, "T31-iii", 0}},
        {A::D2_C12, {Family::D2, "P21-iii", 2}, {Family::C12, "T31-iv", 0}},
        {A::D2_C12, {Family::D2, "T22-i", 1}, {Family::C12, "T32-i", 1}},
        {A::D2_C12, {Family::D2, "T22-ii", 1}, {Family::C12, "T32-ii", 0}},
        {A::C12_B02, {Family::C12, "T31-i", 0}, {Family::B02, "T41-i", 0}},
        {A::C12_B02, {Family::C12, "T31-iii", 0}, {Family::B02, "T41-ii", 1}},
        {A::C12_B02, {Family::C12, "T31-iv", 0}, {Family::B02, "T41-ii", 2}},
        {A::C12_B02, {Family::C12, "T32-i", 1}, {Family::B02, "T41-iii", 1}},
        {A::C12_B02, {Family::C12, "T32-i", 2}, {Family::B02, "T41-iii", 2}},
        {A::D2_C21, {Family::D2, "P21-ii", 1}, {Family::C21, "T51-i", 1}},
        {A::D2_C21, {Family::D2, "P21-ii", 2}, {Family::C21, "T51-i", 2}},
        {A::D2_C21, {Family::D2, "P21-i", 0}, {Family::C21, "T51-ii", 0}},
        {A::D2_C21, {Family::D2, "P21-iii", 1}, {Family::C21, "T51-iii", 0}},
        {A::D2_C21, {Family::D2, "T22-i", 1}, {Family::C21, "T52-i", 0}},
        {A::D2_C21, {Family::D2, "T22-ii", 1}, {Family::C21, "T52-ii", 0}},
        {A::D2_C21, {Family::D2, "T22-ii", 2}, {Family::C21, "T52-iii", 0}},
        {A::C21_B20, {Family::C21, "T51-i", 1}, {Family::B20, "T53-i", 1}},
        {A::C21_B20, {Family::C21, "T51-i", 2}, {Family::B20, "T53-i", 2}},
        {A::C21_B20, {Family::C21, "T51-ii", 0}, {Family::B20, "T53-ii", 0}},
        {A::C21_B20, {Family::C21, "T52-ii", 0}, {Family::B20, "T53-iii", 1}},
        {A::C21_B20, {Family::C21, "T52-iii", 0}, {Family::B20, "T53-iii", 2}},
    };
    return pairs;
}

namespace detail {

// Mixed-basis coefficient streams are compared on the monomial scale: the
// (x/d)^n or (d/x)^n factor is folded into the coefficient so that a
// u-dependent d drops out of the comparison.
template <class K>
std::vector<K> fold_basis_scale(const RawSolution<K>& raw) {
    std::vector<K> out = raw.coeffs;
    if (raw.kind == BasisKind::MIXED_ASC) {
        for (std::size_t n = 0; n < out.size(); ++n)
            out[n] = fdiv(out[n], powi(raw.d, (long)n), "mixed-basis scale d^n");
    } else if (raw.kind == BasisKind::MIXED_DESC) {
        for (std::size_t n = 0; n < out.size(); ++n) out[n] = out[n] * powi(raw.d, (long)n);
    }
    return out;
}

}  // namespace detail

// Coefficient-level confluence: the parent coefficient stream, written over
// rational functions of the vanishing variable and evaluated at u = 0, equals
// the child stream. Throws degenerate_error on unlucky draws; resample.
inline bool check_confluence_pair(const ConfluencePair& pair, const ParamSet& child_params,
                                  int N) {
    if (child_params.family != pair.child.fam)
        throw std::invalid_argument("check_confluence_pair: params family mismatch");
    GenVals<Rat> c = gen_vals(child_params);
    GenVals<RatFunc> lifted = detail::lift_gen_vals(c, pair.arrow);
    auto parent = construct_raw(pair.parent, lifted, N);
    auto child = construct_raw(pair.child, c, N);
    auto pn = detail::fold_basis_scale(parent);
    auto cn = detail::fold_basis_scale(child);
    for (int n = 0; n <= N; ++n)
        if (!(pn[n].at_zero() == cn[n])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Limit ODEs and formal residuals
// ---------------------------------------------------------------------------

struct LimitODE {
    Lp p2, p1, p0;  // p2 f'' + p1 f' + p0 f
};

inline Lp ode_residual(const LimitODE& ode, const Lp& f) {
    Lp d1 = poly_derivative(f);
    return ode.p2 * poly_derivative(d1) + ode.p1 * d1 + ode.p0 * f;
}

// Second-order ODE with coefficients x^2(x - t1), x(T x(x - t1) + (h1-l1+1)x
// - 2 lam (x - t1)), and a1 T x^2 + lam(t1 T - h1 + l1 + lam)x
// - lam(lam+1) t1; the q -> 1 target of the singly confluent family.
inline LimitODE kummer_target_ode(const Rat& T, const Rat& t1, const Rat& lam, const Rat& al1,
                                  const Rat& h1, const Rat& l1) {
    LimitODE o;
    Lp x_t1 = Lp::linear(-t1, Rat(1));
    o.p2 = Lp::monomial(2, Rat(1)) * x_t1;
    Lp inner = poly_scale(Lp::monomial(1, Rat(1)) * x_t1, T) +
               Lp::monomial(1, h1 - l1 + 1) - poly_scale(x_t1, 2 * lam);
    o.p1 = Lp::monomial(1, Rat(1)) * inner;
    o.p0 = Lp::monomial(2, al1 * T) + Lp::monomial(1, lam * (t1 * T - h1 + l1 + lam));
    o.p0.add_term(0, -lam * (lam + 1) * t1);
    return o;
}

// The same equation written for f(w), w = t1 - x, acting on power series:
//   -w f'' + (T w - b) f' + a T f,   a = lam + al1, b = h1 - l1 + 1.
inline LimitODE confluent_series_ode(const Rat& a, const Rat& b, const Rat& T) {
    LimitODE o;
    o.p2 = Lp::monomial(1, Rat(-1));
    o.p1 = Lp::linear(-b, T);
    o.p0 = Lp::monomial(0, a * T);
    return o;
}

// x^2 f'' + x(B^2 x^2 - 2 lam) f' + (al1 B^2 x^2 + lam(lam+1)) f; the q -> 1
// target of the biconfluent families.
inline LimitODE hermite_target_ode(const Rat& B, const Rat& lam, const Rat& al1) {
    LimitODE o;
    o.p2 = Lp::monomial(2, Rat(1));
    o.p1 = Lp::monomial(3, B * B) + Lp::monomial(1, -2 * lam);
    o.p0 = Lp::monomial(2, al1 * B * B) + Lp::monomial(0, lam * (lam + 1));
    return o;
}

// Truncated 1F1(a; b; T w) as a polynomial in w.
inline Lp confluent_series_w(const Rat& a, const Rat& b, const Rat& T, int K) {
    Lp f;
    for (int n = 0; n <= K; ++n) {
        Rat den = rising_factorial(b, n) * factorial(n);
        if (den == 0) throw degenerate_error("confluent series: lower parameter pole");
        f.add_term(n, rising_factorial(a, n) * powi(T, n) / den);
    }
    return f;
}

// The truncated confluent series solves its ODE with residual supported only
// at the truncation boundary degree K.
inline bool confluent_series_ode_check(const Rat& a, const Rat& b, const Rat& T, int K) {
    Lp r = ode_residual(confluent_series_ode(a, b, T), confluent_series_w(a, b, T, K));
    for (auto& [k, v] : r.c)
        if (k < K) return false;
    return true;
}

// Descending formal series sum_n c_n x^{-al1-2n} with
//   c_n = (lam+al1)_{2n} / (n! B^{2n})            (as printed), or
//   c_n = (lam+al1)_{2n} / (n! (2 B^2)^n)         (corrected variant).
inline Lp hermite_formal_series(const Rat& lam, long al1, const Rat& B, int K, bool corrected) {
    Lp g;
    for (int n = 0; n <= K; ++n) {
        Rat den = corrected ? factorial(n) * powi(2 * B * B, (long)n)
                            : factorial(n) * powi(B, 2L * n);
        g.add_term((int)(-al1 - 2L * n), rising_factorial(lam + al1, 2 * n) / den);
    }
    return g;
}

struct FormalSeriesCheck {
    bool pass = false;
    std::vector<int> bad_degrees;  // degrees of x^{al1} * residual above the boundary
    Rat first_bad;                 // value at the first offending degree
};

// Residual of x^{-al1} * (series) against the biconfluent target ODE; the
// series is a formal solution iff every residual degree above the truncation
// boundary x^{-2K} vanishes.
inline FormalSeriesCheck hermite_formal_check(const Rat& lam, long al1, const Rat& B, int K,
                                              bool corrected) {
    Lp g = hermite_formal_series(lam, al1, B, K, corrected);
    Lp r = ode_residual(hermite_target_ode(B, lam, Rat(al1)), g);
    r = r * Lp::monomial((int)al1, Rat(1));
    FormalSeriesCheck out;
    for (auto it = r.c.rbegin(); it != r.c.rend(); ++it)
        if (it->first > -2 * K) {
            if (out.bad_degrees.empty()) out.first_bad = it->second;
            out.bad_degrees.push_back(it->first);
        }
    out.pass = out.bad_degrees.empty();
    return out;
}

// ---------------------------------------------------------------------------
// Convergence tables (q = 1 + eps, exact rational sampling)
// ---------------------------------------------------------------------------

struct ConvergenceRow {
    Rat eps;
    Rat maxdiff;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
    std::vector<Rat> ratios;  // consecutive maxdiff ratios
    bool pass = false;        // decreasing with decade ratios in [1/20, 1/5]
};

namespace detail {

inline long require_int(const Rat& r, const char* what) {
    if (denominator(r) != 1)
        throw std::invalid_argument(std::string("exponent combination not an integer: ") + what);
    return numerator(r).convert_to<long>();
}

inline Lp onef1_monomials(const Rat& a, const Rat& b, const Rat& T, const Rat& t1, int K) {
    Lp S;
    Lp w = Lp::linear(t1, Rat(-1));  // t1 - x
    Lp wn = Lp::one();
    for (int n = 0; n <= K; ++n) {
        Rat den = rising_factorial(b, n) * factorial(n);
        if (den == 0) throw degenerate_error("confluent series: lower parameter pole");
        S = S + poly_scale(wn, rising_factorial(a, n) * powi(T, n) / den);
        wn = wn * w;
    }
    return S;
}

inline Rat max_abs_diff(const Lp& a, const Lp& b, int degmax) {
    Lp d = a - b;
    Rat m(0);
    for (auto& [k, v] : d.c)
        if (0 <= k && k <= degmax && abs(v) > m) m = abs(v);
    return m;
}

inline void finalize_table(ConvergenceTable& t) {
    t.pass = true;
    bool all_zero = true;
    for (auto& r : t.rows) all_zero = all_zero && r.maxdiff == 0;
    if (all_zero) return;  // trivially exact at every eps
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        if (t.rows[i - 1].maxdiff == 0) {
            t.pass = false;
            break;
        }
        Rat ratio = t.rows[i].maxdiff / t.rows[i - 1].maxdiff;
        t.ratios.push_back(ratio);
        if (!(ratio >= Rat(1, 20) && ratio <= Rat(1, 5))) t.pass = false;
    }
}

}  // namespace detail

// Coefficient convergence of the singly confluent catalog series toward
// 1F1(lam+al1; h1-l1+1; T(t1-x)) as q = 1+eps -> 1 with t2 = 1/(T eps).
// Exponents are restricted so every q-power stays rational.
inline ConvergenceTable kummer_limit_study(const Rat& lam, const Rat& al1, const Rat& h1,
                                           const Rat& l1, const Rat& h2, const Rat& t1,
                                           const Rat& T, const std::vector<Rat>& eps_list, int K,
                                           int degmax = 8) {
    long a = detail::require_int(lam + al1, "lam + al1");
    long b = detail::require_int(h1 - l1 + 1, "h1 - l1 + 1");
    long e2 = detail::require_int(h2 - l1 + 1, "h2 - l1 + 1");
    long ce = detail::require_int(l1 - Rat(1, 2), "l1 - 1/2");
    Lp target = detail::onef1_monomials(lam + al1, h1 - l1 + 1, T, t1, K);
    ConvergenceTable out;
    for (const Rat& eps : eps_list) {
        if (eps == 0) throw std::invalid_argument("eps must be nonzero");
        Rat q = 1 + eps;
        Rat t2 = Rat(1) / (T * eps);
        BasisDescriptor basis{BasisKind::POCH_ASC, powi(q, ce) * t1, Rat(0), q};
        Lp S;
        for (int n = 0; n <= K; ++n) {
            Rat den = q_pochhammer(powi(q, b), q, n) * q_pochhammer(powi(q, e2) * t2 / t1, q, n) *
                      q_factorial(q, n);
            if (den == 0) throw degenerate_error("convergence study: vanishing q-factor");
            Rat cn = powi(q, (long)n) * q_pochhammer(powi(q, a), q, n) / den;
            S = S + poly_scale(basis_expand(basis, n), cn);
        }
        out.rows.push_back({eps, detail::max_abs_diff(S, target, degmax)});
    }
    detail::finalize_table(out);
    return out;
}

// Variant through the type (2,1) family: t2 = -1/(T eps) and coefficients
//   c_n = (q^g t1/t2)^n (q^a;q)_n / ((q^b;q)_n (q;q)_n),
//   g = 1 + h1 - lam - al1 - l2.
// With wrong_sign the t2 sign flip is undone; the resulting table fails the
// decade gate, flagging the wrong arrow.
inline ConvergenceTable kummer_limit_study_c21(const Rat& lam, const Rat& al1, const Rat& h1,
                                               const Rat& l1, const Rat& l2, const Rat& t1,
                                               const Rat& T, const std::vector<Rat>& eps_list,
                                               int K, int degmax = 8, bool wrong_sign = false) {
    long a = detail::require_int(lam + al1, "lam + al1");
    long b = detail::require_int(h1 - l1 + 1, "h1 - l1 + 1");
    long g = detail::require_int(1 + h1 - lam - al1 - l2, "1 + h1 - lam - al1 - l2");
    long ce = detail::require_int(l1 - Rat(1, 2), "l1 - 1/2");
    Lp target = detail::onef1_monomials(lam + al1, h1 - l1 + 1, T, t1, K);
    ConvergenceTable out;
    for (const Rat& eps : eps_list) {
        if (eps == 0) throw std::invalid_argument("eps must be nonzero");
        Rat q = 1 + eps;
        Rat t2 = (wrong_sign ? Rat(1) : Rat(-1)) / (T * eps);
        BasisDescriptor basis{BasisKind::POCH_ASC, powi(q, ce) * t1, Rat(0), q};
        Lp S;
        for (int n = 0; n <= K; ++n) {
            Rat den = q_pochhammer(powi(q, b), q, n) * q_factorial(q, n);
            if (den == 0) throw degenerate_error("convergence study: vanishing q-factor");
            Rat cn = powi(powi(q, g) * t1 / t2, (long)n) * q_pochhammer(powi(q, a), q, n) / den;
            S = S + poly_scale(basis_expand(basis, n), cn);
        }
        out.rows.push_back({eps, detail::max_abs_diff(S, target, degmax)});
    }
    detail::finalize_table(out);
    return out;
}

// ---------------------------------------------------------------------------
// Biconfluent coefficient report (non-gated)
// ---------------------------------------------------------------------------

struct HermiteReportRow {
    int n;
    Rat target_printed;    // (lam+al1)_{2n} / (n! B^{2n})
    Rat target_corrected;  // (lam+al1)_{2n} / (n! (2 B^2)^n)
    std::vector<Rat> values;  // even-index series coefficient c_{2n}, one per m
};

struct HermiteReport {
    std::vector<long> ms;  // eps = 1/m^2
    std::vector<HermiteReportRow> rows;
};

// Even-index coefficients of the type (0,2) descending solution at
// q = 1 + 1/m^2, 1/t1 = B/m, 1/t2 = -B/m, compared (without assertion)
// against the formal-series coefficients.
inline HermiteReport hermite_limit_report(const Rat& B, long lam, long al1, long h1, long h2,
                                          const std::vector<long>& ms, int K) {
    if (B == 0) throw std::invalid_argument("B must be nonzero");
    HermiteReport rep;
    rep.ms = ms;
    for (int n = 0; n <= K; ++n) {
        HermiteReportRow row;
        row.n = n;
        Rat rf = rising_factorial(Rat(lam + al1), 2 * n);
        row.target_printed = rf / (factorial(n) * powi(B, 2L * n));
        row.target_corrected = rf / (factorial(n) * powi(2 * B * B, (long)n));
        rep.rows.push_back(row);
    }
    for (long m : ms) {
        if (m == 0) throw std::invalid_argument("m must be nonzero");
        Rat q = 1 + Rat(1, m * m);
        Rat t1 = Rat(m) / B, t2 = -t1;
        Rat A1t1 = powi(q, h1) * t1, A2t2 = powi(q, h2) * t2;
        Rat La1 = powi(q, lam + al1);
        for (int n = 0; n <= K; ++n) {
            Rat inner(0);
            for (int l = 0; l <= 2 * n; ++l)
                inner += powi(q, -(long)l * (2L * n - l)) * powi(A1t1, 2L * n - l) *
                         powi(A2t2, (long)l) /
                         (q_factorial(q, 2 * n - l) * q_factorial(q, l));
            rep.rows[n].values.push_back(powi(q, (long)n) / powi(La1, 2L * n) *
                                         q_pochhammer(La1, q, 2 * n) * inner);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Symbolic epsilon-Taylor operator expansion
// ---------------------------------------------------------------------------

struct EpsilonOperator {
    Operator<TSeries> op;
    TSeries q;
};

struct TaylorCheck {
    bool ok = true;
    bool has_scalar = false;
    Rat scalar;  // single overall scalar at the leading order
    std::string detail;
};

namespace detail {

// Substitute g(x/q) = g + w x g' + w^2 x^2 g''/2 and g(qx) = g + e x g' +
// e^2 x^2 g''/2 with e = q-1, w = 1/q-1, and collect the coefficient
// polynomials of g'', g', g.
inline void taylor_collect(const Operator<TSeries>& op, const TSeries& q,
                           LPoly<TSeries>& G2, LPoly<TSeries>& G1, LPoly<TSeries>& G0) {
    TSeries e = q - TSeries(1);
    TSeries w = tseries_inv(q) - TSeries(1);
    LPoly<TSeries> X1 = LPoly<TSeries>::monomial(1, TSeries(1));
    LPoly<TSeries> X2 = LPoly<TSeries>::monomial(2, TSeries(1));
    G2 = poly_scale(poly_scale(op.A, w * w) + poly_scale(op.C, e * e), TSeries(Rat(1, 2))) * X2;
    G1 = (poly_scale(op.A, w) + poly_scale(op.C, e)) * X1;
    G0 = op.A + op.B + op.C;
}

inline void taylor_check_component(const LPoly<TSeries>& G, const Lp& target, int ell,
                                   const char* name, TaylorCheck& out) {
    Lp lead;
    for (auto& [k, ts] : G.c) {
        if (ts.trunc < ell)
            throw std::logic_error("taylor check: insufficient series precision");
        for (auto& [j, v] : ts.c) {
            if (j < ell && v != 0) {
                out.ok = false;
                out.detail += std::string(name) + ": nonzero below leading order; ";
                return;
            }
        }
        lead.add_term(k, ts.coeff(ell));
    }
    if (target.is_zero()) {
        if (!lead.is_zero()) {
            out.ok = false;
            out.detail += std::string(name) + ": expected zero leading order; ";
        }
        return;
    }
    if (lead.is_zero()) {
        out.ok = false;
        out.detail += std::string(name) + ": leading order vanished; ";
        return;
    }
    int k0 = target.c.begin()->first;
    Rat cand = lead.coeff(k0) / target.coeff(k0);
    if (!out.has_scalar) {
        out.has_scalar = true;
        out.scalar = cand;
    } else if (!(cand == out.scalar)) {
        out.ok = false;
        out.detail += std::string(name) + ": scalar mismatch; ";
        return;
    }
    if (!(lead == poly_scale(target, out.scalar))) {
        out.ok = false;
        out.detail += std::string(name) + ": leading order not proportional to target; ";
    }
}

}  // namespace detail

// Every order below ell of the three collected coefficient polynomials must
// vanish identically, and at order ell they must reproduce the target ODE's
// coefficients up to one shared scalar.
inline TaylorCheck run_taylor_check(const EpsilonOperator& eop, const LimitODE& target, int ell) {
    LPoly<TSeries> G2, G1, G0;
    detail::taylor_collect(eop.op, eop.q, G2, G1, G0);
    TaylorCheck out;
    detail::taylor_check_component(G2, target.p2, ell, "g''", out);
    detail::taylor_check_component(G1, target.p1, ell, "g'", out);
    detail::taylor_check_component(G0, target.p0, ell, "g", out);
    return out;
}

// Type (1,2) operator at q = 1 + eps, t2 = 1/(T eps), with all generator
// exponents integral; the leading order is eps^1.
inline EpsilonOperator c12_epsilon_operator(const Rat& T, const Rat& t1, long h1, long h2,
                                            long l1, long al1, long lam) {
    TSeries eps = TSeries::monomial(1, Rat(1));
    TSeries q = TSeries(1) + eps;
    GenVals<TSeries> g;
    g.q = q;
    g.s = tseries_sqrt1(q, tseries_default_rel_order());
    g.t1 = TSeries(t1);
    g.t2 = TSeries(1) / (TSeries(T) * eps);
    g.A1 = powi(q, h1);
    g.A2 = powi(q, h2);
    g.L1 = powi(q, l1);
    g.a1 = powi(q, al1);
    g.Lam = powi(q, lam);
    return {build_operator(Family::C12, g), q};
}

// Type (0,2) operator at q = 1 + v^2, 1/t1 = B v, 1/t2 = -B v; the leading
// order is v^4.
inline EpsilonOperator b02_epsilon_operator(const Rat& B, long h1, long h2, long al1, long lam) {
    TSeries v = TSeries::monomial(1, Rat(1));
    TSeries q = TSeries(1) + v * v;
    GenVals<TSeries> g;
    g.q = q;
    g.s = tseries_sqrt1(q, tseries_default_rel_order());
    g.t1 = TSeries(1) / (TSeries(B) * v);
    g.t2 = TSeries(0L) - g.t1;
    g.A1 = powi(q, h1);
    g.A2 = powi(q, h2);
    g.a1 = powi(q, al1);
    g.Lam = powi(q, lam);
    return {build_operator(Family::B02, g), q};
}

// Type (2,0) operator at q = 1 - v^2, 1/t1 = B v, 1/t2 = -B v; the leading
// order is v^4.
inline EpsilonOperator b20_epsilon_operator(const Rat& B, long l1, long l2, long al1, long lam) {
    TSeries v = TSeries::monomial(1, Rat(1));
    TSeries q = TSeries(1) - v * v;
    GenVals<TSeries> g;
    g.q = q;
    g.s = tseries_sqrt1(q, tseries_default_rel_order());
    g.t1 = TSeries(1) / (TSeries(B) * v);
    g.t2 = TSeries(0L) - g.t1;
    g.L1 = powi(q, l1);
    g.L2 = powi(q, l2);
    g.a1 = powi(q, al1);
    g.Lam = powi(q, lam);
    return {build_operator(Family::B20, g), q};
}

}  // namespace vq
