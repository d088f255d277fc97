#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "vq/equations.hpp"

using namespace vq;

TEST_CASE("fixture operator coefficients, q=1/4, all generators 1") {
    Op op = build_operator(vqtest::c12_fixture());
    // A = (x - 1/2)^2
    CHECK(op.A.coeff(2) == 1);
    CHECK(op.A.coeff(1) == -1);
    CHECK(op.A.coeff(0) == Rat(1, 4));
    // C = 1 - x/2
    CHECK(op.C.coeff(1) == Rat(-1, 2));
    CHECK(op.C.coeff(0) == 1);
    CHECK(op.C.coeff(2) == 0);
    // B = -x^2 + (3/2)x - 5/4, so that A + B + C = 0
    CHECK(op.B.coeff(2) == -1);
    CHECK(op.B.coeff(1) == Rat(3, 2));
    CHECK(op.B.coeff(0) == Rat(-5, 4));
    CHECK((op.A + op.B + op.C).is_zero());
}

TEST_CASE("fixture operator application") {
    ParamSet p = vqtest::c12_fixture();
    Op op = build_operator(p);
    CHECK(apply_operator(op, Rat(1), Lp::one(), p.q).is_zero());
    CHECK(apply_operator(op, Rat(1), Lp(), p.q).is_zero());
    Lp r = apply_operator(op, Rat(1), Lp::monomial(1, Rat(1)), p.q);
    CHECK(r == Lp::monomial(3, Rat(3)) + Lp::monomial(2, Rat(-21, 8)));
    CHECK_THROWS_AS(apply_operator(op, Rat(0), Lp::one(), p.q), std::invalid_argument);
}

TEST_CASE("coefficient degrees per family") {
    // degrees of the g(x/q) and g(qx) coefficients: (2,2), (2,1), (2,0),
    // (1,2), (0,2); the g(x) coefficient always has degree 2
    struct Row {
        Family fam;
        int degA, degC;
    };
    const Row rows[] = {{Family::D2, 2, 2},
                        {Family::C12, 2, 1},
                        {Family::B02, 2, 0},
                        {Family::C21, 1, 2},
                        {Family::B20, 0, 2}};
    for (auto& row : rows) {
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            ParamSet p = vqtest::draw_params(row.fam, seed);
            Op op = build_operator(p);
            CHECK(op.A.max_deg() == row.degA);
            CHECK(op.C.max_deg() == row.degC);
            CHECK(op.B.max_deg() == 2);
            CHECK(op.A.min_deg() >= 0);
            CHECK(op.B.min_deg() >= 0);
            CHECK(op.C.min_deg() >= 0);
        }
    }
}

TEST_CASE("degree-two middle coefficient identity") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        ParamSet ps = vqtest::draw_params(Family::D2, seed);
        Op op = build_operator(ps);
        Rat pp = *ps.A1 * *ps.A2 * ps.s / *ps.Lam;
        Rat E = -pp * ((Rat(1) / *ps.A2 + Rat(1) / *ps.L2) * ps.t1 +
                       (Rat(1) / *ps.A1 + Rat(1) / *ps.L1) * ps.t2);
        CHECK(op.B.coeff(1) == -E);
        CHECK(op.B.coeff(2) == -(*ps.a1 + *ps.a2));
        CHECK(op.B.coeff(0) == -pp * (ps.s + Rat(1) / ps.s) * ps.t1 * ps.t2);
        // the two singular-point factorizations
        CHECK(op.A.coeff(0) == *ps.A1 * ps.s * ps.t1 * *ps.A2 * ps.s * ps.t2);
        CHECK(op.C.coeff(2) == *ps.a1 * *ps.a2);
    }
}

TEST_CASE("operator application is linear in the series") {
    ParamSet p = vqtest::draw_params(Family::C21, 3);
    Op op = build_operator(p);
    Lp S1, S2;
    for (int k = 0; k <= 5; ++k) {
        S1.add_term(k, Rat(2 * k + 1, k + 2));
        S2.add_term(k - 2, Rat(k + 3, 2 * k + 5));
    }
    Rat P = *p.Lam;
    CHECK(apply_operator(op, P, S1 + S2, p.q) ==
          apply_operator(op, P, S1, p.q) + apply_operator(op, P, S2, p.q));
    CHECK(apply_operator(op, P, poly_scale(S1, Rat(-7, 3)), p.q) ==
          poly_scale(apply_operator(op, P, S1, p.q), Rat(-7, 3)));
}

TEST_CASE("invalid parameter sets rejected by the checked builder") {
    ParamSet p = vqtest::c12_fixture();
    p.s = Rat(1, 3);  // s^2 != q
    CHECK_THROWS_AS(build_operator(p), std::invalid_argument);
}

TEST_CASE("named prefactor scales") {
    ParamSet p = vqtest::draw_params(Family::C12, 9);
    CHECK(family_exponent_data("lam", p) == *p.Lam);
    CHECK(family_exponent_data("neg_a1", p) == Rat(1) / *p.a1);
    CHECK(family_exponent_data("pos_a1", p) == *p.a1);
    CHECK(family_exponent_data("tilde_c", p) ==
          *p.Lam * *p.Lam * *p.a1 * *p.L1 / (*p.A1 * p.q));
    CHECK(family_exponent_data("tilde_b", p) == *p.Lam * *p.Lam * *p.a1 / p.q);
    CHECK_THROWS_AS(family_exponent_data("nope", p), std::invalid_argument);
    ParamSet b20 = vqtest::draw_params(Family::B20, 9);
    CHECK_THROWS_AS(family_exponent_data("tilde_c", b20), std::invalid_argument);
}

TEST_CASE("templated builder agrees with the rational builder") {
    // evaluating the generic builder over plain rationals must match the
    // ParamSet entry point
    ParamSet p = vqtest::draw_params(Family::B02, 13);
    Op a = build_operator(p);
    Op b = build_operator(p.family, gen_vals(p));
    CHECK(a.A == b.A);
    CHECK(a.B == b.B);
    CHECK(a.C == b.C);
}
