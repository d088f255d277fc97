#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "vq/gauge.hpp"

using namespace vq;

TEST_CASE("equation-level gauge moves a linear factor") {
    // A = (1 - alpha x)(x - 3) moves to C as (1 - alpha q x)
    Rat alpha(2, 5), q(1, 3);
    Op op;
    op.A = Lp::linear(Rat(1), -alpha) * Lp::linear(Rat(-3), Rat(1));
    op.B = Lp::linear(Rat(1), Rat(2));
    op.C = Lp::linear(Rat(4), Rat(-1));
    Op g = gauge_equation(op, alpha, GaugeSide::A_SIDE, q);
    CHECK(g.A == Lp::linear(Rat(-3), Rat(1)));
    CHECK(g.B == op.B);
    CHECK(g.C == op.C * Lp::linear(Rat(1), -alpha * q));
}

TEST_CASE("gauge rejects non-divisible coefficients and alpha = 0") {
    Rat q(1, 3);
    Op op;
    op.A = Lp::linear(Rat(1), Rat(1));  // 1 + x, no root at 1/alpha for alpha = 2
    op.B = Lp::one();
    op.C = Lp::one();
    CHECK_THROWS_AS(gauge_equation(op, Rat(2), GaugeSide::A_SIDE, q), std::invalid_argument);
    CHECK_THROWS_AS(gauge_equation(op, Rat(0), GaugeSide::A_SIDE, q), std::invalid_argument);
    CHECK_THROWS_AS(gauge_equation(op, Rat(2), GaugeSide::C_SIDE, q), std::invalid_argument);
}

TEST_CASE("equation gauge roundtrip is the identity") {
    // A-side at alpha, then C-side at alpha*q, recovers the original operator
    vqtest::with_resample(Family::C12, 211, [&](const ParamSet& p) {
        Op op = build_operator(p);
        Rat alpha = Rat(1) / (*p.A1 * p.s * p.t1);  // root of A
        Op g = gauge_equation(op, alpha, GaugeSide::A_SIDE, p.q);
        Op back = gauge_equation(g, alpha * p.q, GaugeSide::C_SIDE, p.q);
        CHECK(back.A == op.A);
        CHECK(back.B == op.B);
        CHECK(back.C == op.C);
        return 0;
    });
}

TEST_CASE("series gauge roundtrip to order 16") {
    const int N = 16;
    Rat q(1, 3), alpha(3, 7);
    Lp S;
    for (int k = 0; k <= N; ++k) S.add_term(k, Rat(2 * k + 1, k + 2));
    Lp attached = gauge_series(S, {alpha, GaugeDirection::ATTACH}, q, N);
    Lp back = gauge_series(attached, {alpha * q, GaugeDirection::DETACH}, q, N);
    CHECK(back == S);
}

TEST_CASE("series gauge input validation") {
    Rat q(1, 3);
    Lp desc = Lp::monomial(-1, Rat(1));
    CHECK_THROWS_AS(gauge_series(desc, {Rat(1, 2), GaugeDirection::ATTACH}, q, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(gauge_series(Lp::one(), {Rat(0), GaugeDirection::ATTACH}, q, 4),
                    std::invalid_argument);
}

TEST_CASE("gauged terminating solution solves the gauged equation") {
    // terminate the ascending confluent series, detach the factor rooted at
    // the g(qx) coefficient, and check the residual of the gauged series
    // against the gauged equation in low monomial degrees
    const int K = 4, N = 14;
    vqtest::with_resample(Family::C12, 223, [&](ParamSet p) {
        p.Lam = powi(p.q, -K) / *p.a1;
        SeriesSolution s = construct({Family::C12, "T31-ii", 0}, p, N);
        REQUIRE(s.terminated_at.has_value());
        Lp S;
        for (int n = 0; n < (int)s.coeffs.size(); ++n)
            S = S + poly_scale(basis_expand(s.basis, n), s.coeffs[n]);
        Op op = build_operator(p);
        // sanity: the terminated series solves the original equation exactly
        CHECK(apply_operator(op, s.P, S, p.q).is_zero());
        Rat alpha = p.s / (*p.L1 * p.t1);  // root of C
        Op gop = gauge_equation(op, alpha, GaugeSide::C_SIDE, p.q);
        Lp Sg = gauge_series(S, {alpha, GaugeDirection::DETACH}, p.q, N);
        Lp R = apply_operator(gop, s.P, Sg, p.q);
        for (int d = 0; d <= N - 6; ++d) CHECK(R.coeff(d) == 0);
        return 0;
    });
}

TEST_CASE("cross-family correspondences hold on random draws") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        vqtest::with_resample(Family::C12, 300 + seed, [&](const ParamSet& p) {
            CHECK(check_correspondence_C12_C21(p));
            return 0;
        });
        vqtest::with_resample(Family::B02, 400 + seed, [&](const ParamSet& p) {
            CHECK(check_correspondence_B02_B20(p));
            return 0;
        });
    }
    CHECK_THROWS_AS(check_correspondence_C12_C21(vqtest::draw_params(Family::B02, 1)),
                    std::invalid_argument);
}

TEST_CASE("correspondence parameter map is an involution") {
    ParamSet p = vqtest::draw_params(Family::C12, 229);
    ParamSet back = correspondence_param_map_C12_C21_roundtrip(p);
    CHECK(*back.a1 == *p.a1);
}
