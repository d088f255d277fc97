#pragma once
// Graded series bases and the triangular projection used for banded residual
// checking. Five kinds cover every catalogued expansion:
//   MONOMIAL_DESC  x^{-n}
//   POCH_ASC       (x/c ; q)_n
//   POCH_DESC      (c/x ; q)_n
//   MIXED_ASC      (c/x ; q)_n (x/d)^n
//   MIXED_DESC     (x/c ; q)_n (d/x)^n

#include <utility>
#include <vector>

#include "vq/poly.hpp"
#include "vq/rational.hpp"

namespace vq {

enum class BasisKind { MONOMIAL_DESC, POCH_ASC, POCH_DESC, MIXED_ASC, MIXED_DESC };

inline const char* basis_kind_name(BasisKind k) {
    switch (k) {
        case BasisKind::MONOMIAL_DESC: return "MONOMIAL_DESC";
        case BasisKind::POCH_ASC: return "POCH_ASC";
        case BasisKind::POCH_DESC: return "POCH_DESC";
        case BasisKind::MIXED_ASC: return "MIXED_ASC";
        case BasisKind::MIXED_DESC: return "MIXED_DESC";
    }
    return "?";
}

// Direction of the extreme degree: phi_n has extreme degree delta * n.
inline int basis_delta(BasisKind k) {
    return (k == BasisKind::POCH_ASC || k == BasisKind::MIXED_ASC) ? +1 : -1;
}

struct BasisDescriptor {
    BasisKind kind;
    Rat c;  // Pochhammer center (unused for MONOMIAL_DESC)
    Rat d;  // monomial scale (MIXED kinds only)
    Rat q;
};

// phi_n as an explicit Laurent polynomial.
inline Lp basis_expand(const BasisDescriptor& b, int n) {
    switch (b.kind) {
        case BasisKind::MONOMIAL_DESC: return Lp::monomial(-n, Rat(1));
        case BasisKind::POCH_ASC: {
            if (b.c == 0) throw std::invalid_argument("basis_expand: zero center");
            Lp p = Lp::one();
            Rat f = Rat(1) / b.c;
            for (int i = 0; i < n; ++i) {
                p = p * Lp::linear(Rat(1), -f);
                f *= b.q;
            }
            return p;
        }
        case BasisKind::POCH_DESC: {
            Lp p = Lp::one();
            Rat f = b.c;
            for (int i = 0; i < n; ++i) {
                Lp fac = Lp::one();
                fac.add_term(-1, -f);
                p = p * fac;
                f *= b.q;
            }
            return p;
        }
        case BasisKind::MIXED_ASC: {
            if (b.d == 0) throw std::invalid_argument("basis_expand: zero scale");
            BasisDescriptor pd{BasisKind::POCH_DESC, b.c, Rat(0), b.q};
            return basis_expand(pd, n) * Lp::monomial(n, powi(b.d, -(long)n));
        }
        case BasisKind::MIXED_DESC: {
            BasisDescriptor pa{BasisKind::POCH_ASC, b.c, Rat(0), b.q};
            return basis_expand(pa, n) * Lp::monomial(-n, powi(b.d, (long)n));
        }
    }
    throw std::logic_error("unreachable");
}

// Extreme coefficient of phi_n (at degree delta * n).
inline Rat basis_extreme_coeff(const BasisDescriptor& b, int n) {
    switch (b.kind) {
        case BasisKind::MONOMIAL_DESC: return Rat(1);
        case BasisKind::POCH_ASC: {
            Rat r(1);
            for (int i = 0; i < n; ++i) r *= -powi(b.q, i) / b.c;
            return r;
        }
        case BasisKind::POCH_DESC: {
            Rat r(1);
            for (int i = 0; i < n; ++i) r *= -b.c * powi(b.q, i);
            return r;
        }
        case BasisKind::MIXED_ASC: {
            // extreme degree is +n, coefficient d^{-n} from (x/d)^n
            return powi(b.d, -(long)n);
        }
        case BasisKind::MIXED_DESC: {
            // extreme degree is -n, coefficient d^n
            return powi(b.d, (long)n);
        }
    }
    throw std::logic_error("unreachable");
}

struct Projection {
    std::vector<Rat> components;  // index 0..M
    Lp overflow;                  // degrees outside the basis span
};

// Greedy triangular elimination by extreme degree, from m = M down to 0.
inline Projection basis_project(const Lp& p, const BasisDescriptor& b, int M) {
    Projection out;
    out.components.assign(M + 1, Rat(0));
    Lp rem = p;
    const int delta = basis_delta(b.kind);
    for (int m = M; m >= 0; --m) {
        Rat lead = basis_extreme_coeff(b, m);
        Rat cm = rem.coeff(delta * m) / lead;
        out.components[m] = cm;
        if (!(cm == 0)) rem = rem - poly_scale(basis_expand(b, m), cm);
    }
    out.overflow = rem;
    return out;
}

}  // namespace vq
