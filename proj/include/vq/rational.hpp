#pragma once
// Exact arbitrary-precision rational arithmetic used throughout the library.
// All identities checked by this project are polynomial/rational, so every
// comparison is an exact equality test; no floating point enters any kernel.

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace vq {

// et_off: plain value semantics, so arithmetic results are again Rat and the
// polynomial/series templates deduce cleanly.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

// Raised when a randomly drawn parameter set makes a required denominator
// vanish (e.g. a Pochhammer factor hitting zero); callers resample.
struct degenerate_error : std::runtime_error {
    explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the leading band coefficient of the triangular solve vanishes.
struct resonance_error : std::runtime_error {
    explicit resonance_error(const std::string& what) : std::runtime_error(what) {}
};

// Canonical string form "p/q" in lowest terms (denominator always printed).
inline std::string rat_str(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parse "p/q" or "p"; rejects zero denominators.
inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rat(boost::multiprecision::mpz_int(s));
    }
    boost::multiprecision::mpz_int num(s.substr(0, slash));
    boost::multiprecision::mpz_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
}

// Integer power over any field-like type; negative exponents divide.
template <class K>
K powi(const K& base, long e) {
    if (e < 0) return K(1) / powi(base, -e);
    K acc(1), b = base;
    for (long n = e; n > 0; n >>= 1) {
        if (n & 1) acc = acc * b;
        if (n > 1) b = b * b;
    }
    return acc;
}

}  // namespace vq
