#pragma once
// q-Pochhammer symbols, rising factorials and Euler infinite-product
// expansions, all exact.

#include "vq/poly.hpp"
#include "vq/rational.hpp"

namespace vq {

// (a;q)_n = prod_{i=0}^{n-1} (1 - a q^i)
template <class K>
K q_pochhammer(const K& a, const K& q, int n) {
    K r(1), aq = a;
    for (int i = 0; i < n; ++i) {
        r = r * (K(1) - aq);
        aq = aq * q;
    }
    return r;
}

// (q;q)_n
template <class K>
K q_factorial(const K& q, int n) {
    return q_pochhammer(q, q, n);
}

// (a)_n = a (a+1) ... (a+n-1)
inline Rat rising_factorial(const Rat& a, int n) {
    Rat r(1);
    for (int i = 0; i < n; ++i) r *= (a + i);
    return r;
}

inline Rat factorial(int n) { return rising_factorial(Rat(1), n); }

// Degrees 0..N of (alpha x; q)_infty: coefficient of x^k is
// (-1)^k q^{k(k-1)/2} alpha^k / (q;q)_k.
inline Lp euler_expand(const Rat& alpha, const Rat& q, int N) {
    Lp p;
    Rat fk(1);
    p.add_term(0, fk);
    for (int k = 1; k <= N; ++k) {
        Rat den = Rat(1) - powi(q, k);
        if (den == 0) throw degenerate_error("euler_expand: (q;q)_k factor vanishes");
        fk *= -alpha * powi(q, k - 1) / den;
        p.add_term(k, fk);
    }
    return p;
}

// Degrees 0..N of 1/(alpha x; q)_infty: coefficient of x^k is alpha^k/(q;q)_k.
inline Lp inv_euler_expand(const Rat& alpha, const Rat& q, int N) {
    Lp p;
    Rat fk(1);
    p.add_term(0, fk);
    for (int k = 1; k <= N; ++k) {
        Rat den = Rat(1) - powi(q, k);
        if (den == 0) throw degenerate_error("inv_euler_expand: (q;q)_k factor vanishes");
        fk *= alpha / den;
        p.add_term(k, fk);
    }
    return p;
}

}  // namespace vq
