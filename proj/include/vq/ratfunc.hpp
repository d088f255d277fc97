#pragma once
// The field Q(u) of rational functions in one variable with exact rational
// coefficients, reduced by polynomial gcd. Used as the coefficient field for
// the confluence (degeneration) checks: operators and coefficient formulas
// are evaluated symbolically in the vanishing generator u, then examined for
// polynomiality and evaluated at u = 0.

#include <vector>

#include "vq/rational.hpp"

namespace vq {

// Dense univariate polynomial over Q, no trailing zero coefficients.
struct UPol {
    std::vector<Rat> c;  // c[k] is the coefficient of u^k

    UPol() = default;
    explicit UPol(const Rat& v) {
        if (v != 0) c.push_back(v);
    }
    static UPol monomial(int deg, const Rat& v) {
        UPol p;
        if (v != 0) {
            p.c.assign(deg + 1, Rat(0));
            p.c[deg] = v;
        }
        return p;
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }  // -1 for zero
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    Rat eval(const Rat& x) const {
        Rat r(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }
    friend UPol operator+(const UPol& a, const UPol& b) {
        UPol r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Rat(0));
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend UPol operator-(const UPol& a, const UPol& b) {
        UPol r = a;
        if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Rat(0));
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend UPol operator*(const UPol& a, const UPol& b) {
        if (a.is_zero() || b.is_zero()) return UPol{};
        UPol r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend bool operator==(const UPol& a, const UPol& b) { return a.c == b.c; }
};

// Remainder of a by b (b nonzero).
inline UPol upol_rem(UPol a, const UPol& b) {
    while (!a.is_zero() && a.deg() >= b.deg()) {
        Rat f = a.c.back() / b.c.back();
        int shift = a.deg() - b.deg();
        for (size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= f * b.c[i];
        a.trim();
    }
    return a;
}

// Exact quotient a / b when b divides a.
inline UPol upol_quot(UPol a, const UPol& b) {
    UPol q;
    if (a.is_zero()) return q;
    q.c.assign(a.deg() - b.deg() + 1, Rat(0));
    while (!a.is_zero() && a.deg() >= b.deg()) {
        Rat f = a.c.back() / b.c.back();
        int shift = a.deg() - b.deg();
        q.c[shift] = f;
        for (size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= f * b.c[i];
        a.trim();
    }
    if (!a.is_zero()) throw std::logic_error("upol_quot: not divisible");
    q.trim();
    return q;
}

inline UPol upol_monic(UPol a) {
    if (a.is_zero()) return a;
    Rat lead = a.c.back();
    for (auto& v : a.c) v /= lead;
    return a;
}

inline UPol upol_gcd(UPol a, UPol b) {
    while (!b.is_zero()) {
        UPol r = upol_rem(a, b);
        a = std::move(b);
        b = upol_monic(std::move(r));
    }
    return upol_monic(std::move(a));
}

// Reduced rational function num/den, den monic and nonzero.
struct RatFunc {
    UPol num, den;

    RatFunc() : num(), den(Rat(1)) {}
    RatFunc(long v) : num(Rat(v)), den(Rat(1)) {}
    explicit RatFunc(const Rat& v) : num(v), den(Rat(1)) {}
    RatFunc(UPol n, UPol d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    static RatFunc var() { return RatFunc(UPol::monomial(1, Rat(1)), UPol(Rat(1))); }

    void reduce() {
        if (den.is_zero()) throw degenerate_error("RatFunc: zero denominator");
        if (num.is_zero()) {
            den = UPol(Rat(1));
            return;
        }
        UPol g = upol_gcd(num, den);
        if (g.deg() > 0) {
            num = upol_quot(num, g);
            den = upol_quot(den, g);
        }
        Rat lead = den.c.back();
        if (lead != 1) {
            for (auto& v : den.c) v /= lead;
            for (auto& v : num.c) v /= lead;
        }
    }

    bool is_polynomial() const { return den.deg() <= 0; }
    Rat eval(const Rat& x) const {
        Rat d = den.eval(x);
        if (d == 0) throw degenerate_error("RatFunc: pole at evaluation point");
        return num.eval(x) / d;
    }
    Rat at_zero() const { return eval(Rat(0)); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.num.is_zero()) throw degenerate_error("RatFunc: division by zero");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;
    }
};

}  // namespace vq
