#pragma once
// Laurent polynomials: finite maps from integer degree to an exact coefficient
// in a field-like type K. The universal carrier for equation coefficients,
// truncated series and residuals. Zero coefficients are never stored.

#include <map>
#include <vector>

#include "vq/rational.hpp"

namespace vq {

template <class K>
struct LPoly {
    std::map<int, K> c;

    LPoly() = default;
    static LPoly zero() { return LPoly{}; }
    static LPoly one() { return monomial(0, K(1)); }
    static LPoly monomial(int deg, const K& v) {
        LPoly p;
        if (!(v == K(0))) p.c.emplace(deg, v);
        return p;
    }
    // c0 + c1*x
    static LPoly linear(const K& c0, const K& c1) {
        LPoly p = monomial(0, c0);
        p.add_term(1, c1);
        return p;
    }

    bool is_zero() const { return c.empty(); }
    K coeff(int deg) const {
        auto it = c.find(deg);
        return it == c.end() ? K(0) : it->second;
    }
    void add_term(int deg, const K& v) {
        auto it = c.find(deg);
        if (it == c.end()) {
            if (!(v == K(0))) c.emplace(deg, v);
        } else {
            it->second = it->second + v;
            if (it->second == K(0)) c.erase(it);
        }
    }
    int min_deg() const { return c.begin()->first; }
    int max_deg() const { return c.rbegin()->first; }

    friend LPoly operator+(const LPoly& a, const LPoly& b) {
        LPoly r = a;
        for (auto& [k, v] : b.c) r.add_term(k, v);
        return r;
    }
    friend LPoly operator-(const LPoly& a, const LPoly& b) {
        LPoly r = a;
        for (auto& [k, v] : b.c) r.add_term(k, K(0) - v);
        return r;
    }
    friend LPoly operator*(const LPoly& a, const LPoly& b) {
        LPoly r;
        for (auto& [k1, v1] : a.c)
            for (auto& [k2, v2] : b.c) r.add_term(k1 + k2, v1 * v2);
        return r;
    }
    friend bool operator==(const LPoly& a, const LPoly& b) { return a.c == b.c; }
};

template <class K>
LPoly<K> poly_scale(const LPoly<K>& p, const K& s) {
    LPoly<K> r;
    for (auto& [k, v] : p.c) r.add_term(k, v * s);
    return r;
}

// p(x) -> p(r*x): the degree-k coefficient is multiplied by r^k.
template <class K>
LPoly<K> poly_scale_arg(const LPoly<K>& p, const K& r) {
    LPoly<K> out;
    for (auto& [k, v] : p.c) out.add_term(k, v * powi(r, k));
    return out;
}

// Termwise derivative: k x^{k-1}, valid for Laurent degrees as well.
template <class K>
LPoly<K> poly_derivative(const LPoly<K>& p) {
    LPoly<K> r;
    for (auto& [k, v] : p.c) r.add_term(k - 1, v * K(k));
    return r;
}

// Truncate to degrees in [lo, hi].
template <class K>
LPoly<K> poly_clip(const LPoly<K>& p, int lo, int hi) {
    LPoly<K> r;
    for (auto& [k, v] : p.c)
        if (lo <= k && k <= hi) r.add_term(k, v);
    return r;
}

using Lp = LPoly<Rat>;

}  // namespace vq
