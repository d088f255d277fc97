#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "vq/catalog.hpp"

using namespace vq;

TEST_CASE("id strings parse and roundtrip") {
    auto id = parse_solution_id("D2:P21-ii:12");
    REQUIRE(id.has_value());
    CHECK(id->fam == Family::D2);
    CHECK(id->label == "P21-ii");
    CHECK(id->branch == 1);
    CHECK(id->str() == "D2:P21-ii:12");

    auto id2 = parse_solution_id("C12:T31-ii");
    REQUIRE(id2.has_value());
    CHECK(id2->branch == 0);

    CHECK(!parse_solution_id("nocolon").has_value());
    CHECK(!parse_solution_id("X9:T31-ii").has_value());
    CHECK(!parse_solution_id("D2:P21-ii:13").has_value());
    for (auto& e : list_catalog()) {
        auto back = parse_solution_id(e.id.str());
        REQUIRE(back.has_value());
        CHECK(*back == e.id);
    }
}

TEST_CASE("catalog inventory") {
    int verifiable = 0, flagged = 0;
    for (auto& e : list_catalog()) (e.residual_verifiable ? verifiable : flagged)++;
    CHECK(verifiable == 33);
    CHECK(flagged == 4);
    // spot checks of kind/prefactor assignments
    auto* e1 = find_catalog_entry({Family::D2, "T22-ii", 1});
    REQUIRE(e1);
    CHECK(e1->kind == BasisKind::MIXED_DESC);
    CHECK(e1->mu == "neg_a1");
    auto* e2 = find_catalog_entry({Family::C12, "T31-ii", 0});
    REQUIRE(e2);
    CHECK(e2->kind == BasisKind::POCH_ASC);
    CHECK(e2->mu == "lam");
    auto* e3 = find_catalog_entry({Family::B20, "T53-ii", 0});
    REQUIRE(e3);
    CHECK(e3->kind == BasisKind::MONOMIAL_DESC);
    CHECK(e3->mu == "neg_a1");
}

TEST_CASE("aliases resolve to existing entries") {
    struct Row {
        SolutionId alias, target;
    };
    const Row rows[] = {
        {{Family::C12, "P63-g1", 0}, {Family::C12, "T31-i", 0}},
        {{Family::C21, "P63-g4", 0}, {Family::C21, "T51-ii", 0}},
        {{Family::B02, "P65-g1", 0}, {Family::B02, "T41-i", 0}},
        {{Family::B20, "P65-g4", 0}, {Family::B20, "T53-ii", 0}},
    };
    for (auto& r : rows) {
        auto res = resolve_alias(r.alias);
        REQUIRE(res.has_value());
        CHECK(*res == r.target);
        REQUIRE(find_catalog_entry(r.target) != nullptr);
        // the alias constructs the same series
        ParamSet p = vqtest::draw_params(r.target.fam, 17);
        SeriesSolution a = construct(r.alias, p, 6);
        SeriesSolution b = construct(r.target, p, 6);
        CHECK(a.coeffs == b.coeffs);
        CHECK(a.P == b.P);
    }
}

TEST_CASE("flagged gauge-product entries refuse construction") {
    const SolutionId flagged[] = {{Family::C12, "P63-g2", 0},
                                  {Family::C21, "P63-g3", 0},
                                  {Family::B02, "P65-g2", 0},
                                  {Family::B20, "P65-g3", 0}};
    for (auto& id : flagged) {
        auto* e = find_catalog_entry(id);
        REQUIRE(e);
        CHECK(!e->residual_verifiable);
        ParamSet p = vqtest::draw_params(id.fam, 23);
        CHECK_THROWS_AS(construct(id, p, 4), std::invalid_argument);
    }
    CHECK_THROWS_AS(construct({Family::D2, "nope", 0}, vqtest::draw_params(Family::D2, 1), 4),
                    std::invalid_argument);
}

TEST_CASE("normalization c0 = 1 for every verifiable entry") {
    for (auto& e : list_catalog()) {
        if (!e.residual_verifiable) continue;
        vqtest::with_resample(e.id.fam, 31, [&](const ParamSet& p) {
            SeriesSolution s = construct(e.id, p, 4);
            CHECK(s.coeffs[0] == 1);
            CHECK(s.basis.kind == e.kind);
            CHECK(s.P == family_exponent_data(e.mu, p));
            return 0;
        });
    }
}

TEST_CASE("first coefficient closed form of the ascending confluent series") {
    // c1 = q(1 - Lam a1) / ((1 - qA1/L1)(1 - qA2t2/(L1t1))(1 - q))
    SolutionId id{Family::C12, "T31-ii", 0};
    for (std::uint64_t seed = 2; seed <= 6; ++seed) {
        vqtest::with_resample(Family::C12, seed, [&](const ParamSet& p) {
            SeriesSolution s = construct(id, p, 3);
            Rat expected = p.q * (Rat(1) - *p.Lam * *p.a1) /
                           ((Rat(1) - p.q * *p.A1 / *p.L1) *
                            (Rat(1) - p.q * *p.A2 * p.t2 / (*p.L1 * p.t1)) * (Rat(1) - p.q));
            CHECK(s.coeffs[1] == expected);
            return 0;
        });
    }
}

TEST_CASE("first coefficient of the biconfluent descending series") {
    // c1 = (1 - Lam a1) (s / (Lam a1)) (A1 t1 + A2 t2) / (1 - q)
    SolutionId id{Family::B02, "T41-i", 0};
    vqtest::with_resample(Family::B02, 5, [&](const ParamSet& p) {
        SeriesSolution s = construct(id, p, 2);
        Rat La1 = *p.Lam * *p.a1;
        Rat expected =
            (Rat(1) - La1) * (p.s / La1) * (*p.A1 * p.t1 + *p.A2 * p.t2) / (Rat(1) - p.q);
        CHECK(s.coeffs[1] == expected);
        return 0;
    });
}

TEST_CASE("termination at Lam a1 = 1 gives the constant solution") {
    ParamSet p = vqtest::draw_params(Family::C12, 41);
    p.Lam = Rat(1) / *p.a1;
    SeriesSolution s = construct({Family::C12, "T31-ii", 0}, p, 8);
    REQUIRE(s.terminated_at.has_value());
    CHECK(*s.terminated_at == 0);
    for (int n = 1; n <= 8; ++n) CHECK(s.coeffs[n] == 0);
}

TEST_CASE("termination index for Lam a1 = q^-3") {
    // (q^{lam+al1};q)_n vanishes from n = 4 on, so the last surviving index
    // is 3 (one below the naive reading of the announced polynomial degree)
    for (auto& e : list_catalog()) {
        if (!e.residual_verifiable) continue;
        if (e.id.fam != Family::C12 && e.id.fam != Family::B02) continue;
        vqtest::with_resample(e.id.fam, 43, [&](ParamSet p) {
            p.Lam = powi(p.q, -3) / *p.a1;
            auto td = terminating_degree(e.id, p, 10);
            REQUIRE(td.has_value());
            CHECK(*td <= 3);
            return 0;
        });
    }
}

TEST_CASE("branch views differ and swap consistently") {
    vqtest::with_resample(Family::D2, 47, [&](const ParamSet& p) {
        SeriesSolution b1 = construct({Family::D2, "P21-ii", 1}, p, 5);
        SeriesSolution b2 = construct({Family::D2, "P21-ii", 2}, p, 5);
        CHECK(b1.basis.c == *p.L1 * p.t1 / p.s);
        CHECK(b2.basis.c == *p.L2 * p.t2 / p.s);
        // swapping the indexed generators exchanges the branches
        ParamSet sw = p;
        std::swap(sw.t1, sw.t2);
        std::swap(sw.A1, sw.A2);
        std::swap(sw.L1, sw.L2);
        SeriesSolution b1s = construct({Family::D2, "P21-ii", 1}, sw, 5);
        CHECK(b1s.coeffs == b2.coeffs);
        CHECK(b1s.basis.c == b2.basis.c);
        return 0;
    });
}
