#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vq/qalg.hpp"

using namespace vq;

TEST_CASE("q_pochhammer base cases and values") {
    CHECK(q_pochhammer(Rat(3), Rat(1, 2), 0) == Rat(1));
    // (a;q)_2 = (1-a)(1-aq)
    CHECK(q_pochhammer(Rat(3), Rat(1, 2), 2) == (Rat(1) - 3) * (Rat(1) - Rat(3, 2)));
    CHECK(q_pochhammer(Rat(1), Rat(1, 2), 5) == 0);  // (1;q)_n = 0 for n >= 1
}

TEST_CASE("q_pochhammer splitting identity") {
    // (a;q)_{m+n} = (a;q)_m (a q^m; q)_n
    Rat a(5, 7), q(2, 3);
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            CHECK(q_pochhammer(a, q, m + n) ==
                  q_pochhammer(a, q, m) * q_pochhammer(a * powi(q, m), q, n));
}

TEST_CASE("rising factorial and factorial") {
    CHECK(rising_factorial(Rat(3, 2), 3) == Rat(3, 2) * Rat(5, 2) * Rat(7, 2));
    CHECK(rising_factorial(Rat(5), 0) == 1);
    CHECK(rising_factorial(Rat(0), 2) == 0);
    CHECK(factorial(5) == 120);
    CHECK(factorial(0) == 1);
}

TEST_CASE("euler_expand frozen coefficients at alpha=1, q=1/2") {
    Lp e = euler_expand(Rat(1), Rat(1, 2), 4);
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == Rat(-2));
    CHECK(e.coeff(2) == Rat(4, 3));
}

TEST_CASE("inv_euler_expand frozen coefficients at alpha=1, q=1/2") {
    Lp e = inv_euler_expand(Rat(1), Rat(1, 2), 4);
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == Rat(2));
}

TEST_CASE("euler and inverse euler expansions are reciprocal") {
    const int N = 8;
    Rat alpha(3, 5), q(1, 3);
    Lp prod = poly_clip(euler_expand(alpha, q, N) * inv_euler_expand(alpha, q, N), 0, N);
    CHECK(prod == Lp::one());
}

TEST_CASE("euler expansion functional equation") {
    // (alpha x; q)_inf = (1 - alpha x)(alpha q x; q)_inf, through degree N-1
    const int N = 10;
    Rat alpha(2, 7), q(2, 5);
    Lp lhs = euler_expand(alpha, q, N);
    Lp rhs = Lp::linear(Rat(1), -alpha) * euler_expand(alpha * q, q, N);
    CHECK(poly_clip(lhs - rhs, 0, N - 1).is_zero());
}

TEST_CASE("degenerate q rejected") {
    CHECK_THROWS_AS(euler_expand(Rat(1), Rat(1), 3), degenerate_error);
    CHECK_THROWS_AS(inv_euler_expand(Rat(1), Rat(1), 3), degenerate_error);
}
