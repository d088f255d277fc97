#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vq/rational.hpp"

using namespace vq;

TEST_CASE("rat_str canonical forms") {
    CHECK(rat_str(Rat(3, 4)) == "3/4");
    CHECK(rat_str(Rat(-3, 4)) == "-3/4");
    CHECK(rat_str(Rat(5)) == "5/1");
    CHECK(rat_str(Rat(0)) == "0/1");
    CHECK(rat_str(Rat(6, 4)) == "3/2");  // normalized
}

TEST_CASE("rat_parse roundtrip and validation") {
    CHECK(rat_parse("3/4") == Rat(3, 4));
    CHECK(rat_parse("-7") == Rat(-7));
    CHECK(rat_parse("10/15") == Rat(2, 3));
    CHECK(rat_parse(rat_str(Rat(22, 7))) == Rat(22, 7));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS(rat_parse("abc"));
}

TEST_CASE("powi handles negative exponents exactly") {
    CHECK(powi(Rat(2), 10) == Rat(1024));
    CHECK(powi(Rat(2), -3) == Rat(1, 8));
    CHECK(powi(Rat(3, 5), 0) == Rat(1));
    CHECK(powi(Rat(-2, 3), 3) == Rat(-8, 27));
    CHECK(powi(Rat(5, 7), -2) == Rat(49, 25));
}

TEST_CASE("powi multiplicativity property") {
    Rat b(7, 11);
    for (long m = -4; m <= 4; ++m)
        for (long n = -4; n <= 4; ++n) CHECK(powi(b, m) * powi(b, n) == powi(b, m + n));
}

TEST_CASE("error types distinguishable") {
    degenerate_error d("x");
    resonance_error r("y");
    CHECK(std::string(d.what()).find("x") != std::string::npos);
    CHECK(std::string(r.what()).find("y") != std::string::npos);
}
