#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vq/basis.hpp"

using namespace vq;

TEST_CASE("basis_expand frozen expansions") {
    // ascending Pochhammer, c = 2, q = 1/2, n = 2: (1 - x/2)(1 - x/4)
    BasisDescriptor ba{BasisKind::POCH_ASC, Rat(2), Rat(0), Rat(1, 2)};
    Lp p = basis_expand(ba, 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == Rat(-3, 4));
    CHECK(p.coeff(2) == Rat(1, 8));
    // descending Pochhammer, c = 3, n = 1: 1 - 3/x
    BasisDescriptor bd{BasisKind::POCH_DESC, Rat(3), Rat(0), Rat(1, 2)};
    Lp d = basis_expand(bd, 1);
    CHECK(d.coeff(0) == 1);
    CHECK(d.coeff(-1) == Rat(-3));
    // n = 0 is the constant 1 for every kind
    for (auto kind : {BasisKind::MONOMIAL_DESC, BasisKind::POCH_ASC, BasisKind::POCH_DESC,
                      BasisKind::MIXED_ASC, BasisKind::MIXED_DESC}) {
        BasisDescriptor b{kind, Rat(2), Rat(3), Rat(1, 2)};
        CHECK(basis_expand(b, 0) == Lp::one());
    }
    BasisDescriptor bm{BasisKind::MONOMIAL_DESC, Rat(0), Rat(0), Rat(1, 2)};
    CHECK(basis_expand(bm, 4) == Lp::monomial(-4, Rat(1)));
}

TEST_CASE("extreme degree and extreme coefficient consistency") {
    std::vector<BasisDescriptor> descs = {
        {BasisKind::MONOMIAL_DESC, Rat(0), Rat(0), Rat(1, 3)},
        {BasisKind::POCH_ASC, Rat(5, 2), Rat(0), Rat(1, 3)},
        {BasisKind::POCH_DESC, Rat(7, 3), Rat(0), Rat(2, 5)},
        {BasisKind::MIXED_ASC, Rat(3), Rat(5, 4), Rat(1, 3)},
        {BasisKind::MIXED_DESC, Rat(3), Rat(5, 4), Rat(1, 3)},
    };
    for (auto& b : descs) {
        int delta = basis_delta(b.kind);
        for (int n = 0; n <= 6; ++n) {
            Lp phi = basis_expand(b, n);
            int ext = delta > 0 ? phi.max_deg() : phi.min_deg();
            CHECK(ext == delta * n);
            CHECK(phi.coeff(delta * n) == basis_extreme_coeff(b, n));
        }
    }
}

TEST_CASE("projection of a basis element is a unit vector") {
    BasisDescriptor b{BasisKind::POCH_ASC, Rat(2), Rat(0), Rat(1, 2)};
    Projection pr = basis_project(basis_expand(b, 2), b, 2);
    REQUIRE(pr.components.size() == 3);
    CHECK(pr.components[0] == 0);
    CHECK(pr.components[1] == 0);
    CHECK(pr.components[2] == 1);
    CHECK(pr.overflow.is_zero());
}

TEST_CASE("projection of x^2 onto an ascending Pochhammer basis") {
    // x^2 = c^2 [ phi_0 - (1 + 1/q) phi_1 + (1/q) phi_2 ]
    Rat c(3, 2), q(1, 3);
    BasisDescriptor b{BasisKind::POCH_ASC, c, Rat(0), q};
    Projection pr = basis_project(Lp::monomial(2, Rat(1)), b, 2);
    CHECK(pr.components[0] == c * c);
    CHECK(pr.components[1] == -c * c * (1 + Rat(1) / q));
    CHECK(pr.components[2] == c * c / q);
    CHECK(pr.overflow.is_zero());
}

TEST_CASE("positive degrees overflow a descending basis") {
    BasisDescriptor b{BasisKind::POCH_DESC, Rat(2), Rat(0), Rat(1, 2)};
    Projection pr = basis_project(Lp::monomial(1, Rat(1)), b, 4);
    for (auto& cm : pr.components) CHECK(cm == 0);
    CHECK(pr.overflow == Lp::monomial(1, Rat(1)));
}

TEST_CASE("re-assembly identity for every kind") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    std::vector<BasisDescriptor> descs = {
        {BasisKind::MONOMIAL_DESC, Rat(0), Rat(0), Rat(1, 3)},
        {BasisKind::POCH_ASC, Rat(5, 2), Rat(0), Rat(1, 3)},
        {BasisKind::POCH_DESC, Rat(7, 3), Rat(0), Rat(2, 5)},
        {BasisKind::MIXED_ASC, Rat(3), Rat(5, 4), Rat(1, 3)},
        {BasisKind::MIXED_DESC, Rat(3), Rat(5, 4), Rat(1, 3)},
    };
    const int M = 6;
    for (auto& b : descs) {
        int delta = basis_delta(b.kind);
        Lp p;
        for (int k = -M - 2; k <= M + 2; ++k) p.add_term(k, Rat(num(rng), den(rng)));
        Projection pr = basis_project(p, b, M);
        Lp back = pr.overflow;
        for (int m = 0; m <= M; ++m)
            back = back + poly_scale(basis_expand(b, m), pr.components[m]);
        CHECK(back == p);
        // overflow carries nothing at the basis extreme degrees
        for (int m = 0; m <= M; ++m) CHECK(pr.overflow.coeff(delta * m) == 0);
    }
}

TEST_CASE("invalid descriptors rejected") {
    BasisDescriptor zero_center{BasisKind::POCH_ASC, Rat(0), Rat(0), Rat(1, 2)};
    CHECK_THROWS_AS(basis_expand(zero_center, 1), std::invalid_argument);
    BasisDescriptor zero_scale{BasisKind::MIXED_ASC, Rat(2), Rat(0), Rat(1, 2)};
    CHECK_THROWS_AS(basis_expand(zero_scale, 1), std::invalid_argument);
}
