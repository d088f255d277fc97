#pragma once
// Truncated Laurent series in one deformation parameter with exact rational
// coefficients. Used for the symbolic Taylor expansion of the operators at
// q = 1 + eps (or q = 1 +/- v^2): each generator power expands exactly, and
// the vanishing of all sub-leading orders is an exact statement about the
// stored coefficients. Truncation order is tracked through every operation.

#include <limits>
#include <map>

#include "vq/rational.hpp"

namespace vq {

struct TSeries {
    // Coefficients are valid for degrees <= trunc; higher terms are unknown.
    std::map<int, Rat> c;
    int trunc = EXACT;

    static constexpr int EXACT = std::numeric_limits<int>::max() / 4;

    TSeries() = default;
    TSeries(long v) {
        if (v != 0) c.emplace(0, Rat(v));
    }
    explicit TSeries(const Rat& v) {
        if (v != 0) c.emplace(0, v);
    }
    static TSeries monomial(int deg, const Rat& v, int tr = EXACT) {
        TSeries t;
        t.trunc = tr;
        if (v != 0 && deg <= tr) t.c.emplace(deg, v);
        return t;
    }

    bool stored_zero() const { return c.empty(); }
    int ord() const { return c.empty() ? EXACT : c.begin()->first; }
    Rat coeff(int deg) const {
        auto it = c.find(deg);
        return it == c.end() ? Rat(0) : it->second;
    }
    void clip() {
        for (auto it = c.begin(); it != c.end();) {
            if (it->first > trunc || it->second == 0)
                it = c.erase(it);
            else
                ++it;
        }
    }

    friend TSeries operator+(const TSeries& a, const TSeries& b) {
        TSeries r = a;
        r.trunc = std::min(a.trunc, b.trunc);
        for (auto& [k, v] : b.c) {
            auto it = r.c.find(k);
            if (it == r.c.end())
                r.c.emplace(k, v);
            else
                it->second += v;
        }
        r.clip();
        return r;
    }
    friend TSeries operator-(const TSeries& a, const TSeries& b) {
        TSeries nb = b;
        for (auto& [k, v] : nb.c) v = -v;
        return a + nb;
    }
    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        TSeries r;
        long ta = (a.trunc >= EXACT && b.trunc >= EXACT)
                      ? EXACT
                      : std::min((long)a.trunc + b.ord(), (long)b.trunc + a.ord());
        r.trunc = (int)std::min<long>(ta, EXACT);
        for (auto& [k1, v1] : a.c)
            for (auto& [k2, v2] : b.c) {
                if (k1 + k2 > r.trunc) continue;
                auto it = r.c.find(k1 + k2);
                if (it == r.c.end())
                    r.c.emplace(k1 + k2, v1 * v2);
                else
                    it->second += v1 * v2;
            }
        r.clip();
        return r;
    }
    friend TSeries operator/(const TSeries& a, const TSeries& b);
    // "Equal to stored precision".
    friend bool operator==(const TSeries& a, const TSeries& b) {
        int t = std::min(a.trunc, b.trunc);
        for (auto& [k, v] : a.c)
            if (k <= t && !(b.coeff(k) == v)) return false;
        for (auto& [k, v] : b.c)
            if (k <= t && !(a.coeff(k) == v)) return false;
        return true;
    }
};

// Working precision used when an exact series (polynomial) must be inverted;
// reciprocals are genuinely infinite, so a finite relative order is required.
inline int& tseries_default_rel_order() {
    static int v = 24;
    return v;
}

// Reciprocal: b = eps^o * (unit); the unit part is inverted by the standard
// coefficient recursion. If b has trunc tb, the result is valid to tb - 2o.
inline TSeries tseries_inv(const TSeries& b) {
    if (b.stored_zero()) throw degenerate_error("TSeries: division by zero series");
    const int o = b.ord();
    const Rat lead = b.c.begin()->second;
    // relative order of the unit part
    const int rel = (b.trunc >= TSeries::EXACT) ? tseries_default_rel_order()
                                                : b.trunc - o;
    std::map<int, Rat> r;  // reciprocal of the unit part, degrees 0..rel
    r[0] = Rat(1) / lead;
    for (int k = 1; k <= rel; ++k) {
        Rat acc(0);
        for (auto& [j, bj] : b.c) {
            int jj = j - o;
            if (jj <= 0 || jj > k) continue;
            auto it = r.find(k - jj);
            if (it != r.end()) acc += bj * it->second;
        }
        if (acc != 0) r[k] = -acc / lead;
    }
    TSeries out;
    out.trunc = rel - o;
    for (auto& [k, v] : r)
        if (k - o <= out.trunc && v != 0) out.c.emplace(k - o, v);
    return out;
}

inline TSeries operator/(const TSeries& a, const TSeries& b) { return a * tseries_inv(b); }

// Square root of a series with constant term 1 (order 0), via the coefficient
// recursion y_n = (a_n - sum_{0<i<n} y_i y_{n-i}) / 2.
inline TSeries tseries_sqrt1(const TSeries& a, int order) {
    if (a.coeff(0) != 1) throw std::invalid_argument("tseries_sqrt1: constant term must be 1");
    TSeries y;
    y.trunc = std::min(order, a.trunc);
    y.c[0] = Rat(1);
    for (int n = 1; n <= y.trunc; ++n) {
        Rat acc = a.coeff(n);
        for (int i = 1; i < n; ++i) acc -= y.coeff(i) * y.coeff(n - i);
        if (acc != 0) y.c[n] = acc / 2;
    }
    return y;
}

}  // namespace vq
