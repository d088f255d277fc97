#pragma once
// The five three-term q-difference operators
//   A(x) g(x/q) + B(x) g(x) + C(x) g(qx) = 0
// built from the multiplicative generator parameterization, plus the operator
// application to prefactored series. The builder is templated over the
// coefficient field so that the same formulas can be evaluated with plain
// rationals, with rational functions of a degeneration variable u, or with
// truncated series in a deformation parameter.

#include <string>

#include "vq/params.hpp"
#include "vq/poly.hpp"
#include "vq/rational.hpp"

namespace vq {

// Generator values in an arbitrary field K. Only the fields used by the
// requested family are read.
template <class K>
struct GenVals {
    K q{}, s{}, t1{}, t2{}, A1{}, A2{}, L1{}, L2{}, a1{}, a2{}, Lam{};
};

inline GenVals<Rat> gen_vals(const ParamSet& p) {
    GenVals<Rat> g;
    g.q = p.q;
    g.s = p.s;
    g.t1 = p.t1;
    g.t2 = p.t2;
    auto v = [](const std::optional<Rat>& o) { return o.value_or(Rat(0)); };
    g.A1 = v(p.A1);
    g.A2 = v(p.A2);
    g.L1 = v(p.L1);
    g.L2 = v(p.L2);
    g.a1 = v(p.a1);
    g.a2 = v(p.a2);
    g.Lam = v(p.Lam);
    return g;
}

template <class K>
struct Operator {
    LPoly<K> A, B, C;  // coefficients of g(x/q), g(x), g(qx)
};

using Op = Operator<Rat>;

template <class K>
Operator<K> build_operator(Family fam, const GenVals<K>& p) {
    using P = LPoly<K>;
    const K& q = p.q;
    const K& s = p.s;
    K one(1);
    switch (fam) {
        case Family::D2: {
            P A = P::linear(K(0) - p.A1 * s * p.t1, one) * P::linear(K(0) - p.A2 * s * p.t2, one);
            P C = poly_scale(P::linear(K(0) - p.L1 * p.t1 / s, one) * P::linear(K(0) - p.L2 * p.t2 / s, one),
                             p.a1 * p.a2);
            K pp = p.A1 * p.A2 * s / p.Lam;
            K E = K(0) - pp * ((one / p.A2 + one / p.L2) * p.t1 + (one / p.A1 + one / p.L1) * p.t2);
            P B;
            B.add_term(2, K(0) - (p.a1 + p.a2));
            B.add_term(1, K(0) - E);
            B.add_term(0, K(0) - pp * (s + one / s) * p.t1 * p.t2);
            return {A, B, C};
        }
        case Family::C12: {
            P A = P::linear(K(0) - p.A1 * s * p.t1, one) * P::linear(K(0) - p.A2 * s * p.t2, one);
            P C = poly_scale(P::linear(p.L1 * p.t1 / s, K(0) - one),
                             p.A1 * p.A2 * s * p.t2 / (p.L1 * p.Lam * p.Lam));
            P B;
            B.add_term(2, K(0) - p.a1);
            B.add_term(1, (p.A1 * p.A2 * s / p.Lam) *
                              (p.t1 / p.A2 + p.t2 / p.A1 + p.t2 / p.L1));
            B.add_term(0, K(0) - (p.A1 * p.A2 / p.Lam) * (q + one) * p.t1 * p.t2);
            return {A, B, C};
        }
        case Family::B02: {
            P A = poly_scale(P::linear(one, K(0) - one / (p.A1 * s * p.t1)) *
                                 P::linear(one, K(0) - one / (p.A2 * s * p.t2)),
                             p.Lam * p.Lam * q);
            P C = P::one();
            P B;
            B.add_term(2, K(0) - p.a1 * p.Lam * p.Lam / (p.A1 * p.A2 * p.t1 * p.t2));
            B.add_term(1, p.Lam * s * (one / (p.A1 * p.t1) + one / (p.A2 * p.t2)));
            B.add_term(0, K(0) - p.Lam * (q + one));
            return {A, B, C};
        }
        case Family::C21: {
            P C = P::linear(K(0) - p.L1 * p.t1 / s, one) * P::linear(K(0) - p.L2 * p.t2 / s, one);
            P A = poly_scale(P::linear(K(0) - p.A1 * s * p.t1, one),
                             K(0) - p.L1 * p.L2 * p.Lam * p.Lam * p.t2 / (p.A1 * s));
            P B;
            B.add_term(2, K(0) - one / p.a1);
            B.add_term(1, (p.L1 * p.L2 * p.Lam / s) *
                              (p.t1 / p.L2 + (one / p.A1 + one / p.L1) * p.t2));
            B.add_term(0, K(0) - p.L1 * p.L2 * p.Lam * (one + one / q) * p.t1 * p.t2);
            return {A, B, C};
        }
        case Family::B20: {
            P A = P::one();
            P C = poly_scale(P::linear(one, K(0) - s / (p.L1 * p.t1)) *
                                 P::linear(one, K(0) - s / (p.L2 * p.t2)),
                             one / (p.Lam * p.Lam * q));
            P B;
            B.add_term(2, K(0) - one / (p.a1 * p.L1 * p.L2 * p.Lam * p.Lam * p.t1 * p.t2));
            B.add_term(1, (one / (p.Lam * s)) * (one / (p.L1 * p.t1) + one / (p.L2 * p.t2)));
            B.add_term(0, K(0) - (one + one / q) / p.Lam);
            return {A, B, C};
        }
    }
    throw std::logic_error("unreachable");
}

inline Op build_operator(const ParamSet& p) {
    auto bad = check_constraints(p);
    if (!bad.empty()) throw std::invalid_argument("invalid ParamSet: " + bad.front());
    return build_operator(p.family, gen_vals(p));
}

// For g(x) = x^mu S(x) with prefactor scale P = q^mu, the residual of the
// operator acting on g equals x^mu * R(x) with
//   R = A(x) P^{-1} S(x/q) + B(x) S(x) + C(x) P S(qx).
template <class K>
LPoly<K> apply_operator(const Operator<K>& op, const K& P, const LPoly<K>& S, const K& q) {
    if (P == K(0)) throw std::invalid_argument("apply_operator: P = 0");
    LPoly<K> r = poly_scale(op.A * poly_scale_arg(S, K(1) / q), K(1) / P);
    r = r + op.B * S;
    r = r + poly_scale(op.C * poly_scale_arg(S, q), P);
    return r;
}

// Named prefactor scales P = q^mu used by the catalog.
//   "lam"        mu = lambda                   P = Lam
//   "neg_a1"     mu = -alpha1                  P = 1/a1
//   "pos_a1"     mu = +alpha1                  P = a1
//   "tilde_c"    mu = 2 lam + alpha1 - h1 + l1 - 1   P = Lam^2 a1 L1/(A1 q)
//   "tilde_b"    mu = 2 lam + alpha1 - 1             P = Lam^2 a1 / q
inline Rat family_exponent_data(const std::string& mu, const ParamSet& p) {
    auto need = [&](const std::optional<Rat>& o, const char* n) -> Rat {
        if (!o) throw std::invalid_argument(std::string("prefactor needs generator ") + n);
        return *o;
    };
    if (mu == "lam") return need(p.Lam, "Lam");
    if (mu == "neg_a1") return Rat(1) / need(p.a1, "a1");
    if (mu == "pos_a1") return need(p.a1, "a1");
    if (mu == "tilde_c")
        return need(p.Lam, "Lam") * need(p.Lam, "Lam") * need(p.a1, "a1") * need(p.L1, "L1") /
               (need(p.A1, "A1") * p.q);
    if (mu == "tilde_b")
        return need(p.Lam, "Lam") * need(p.Lam, "Lam") * need(p.a1, "a1") / p.q;
    throw std::invalid_argument("unknown prefactor id: " + mu);
}

}  // namespace vq
