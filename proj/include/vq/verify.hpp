#pragma once
// Universal verification: banded residual checking in the solution's own
// basis, an independent triangular recurrence-solving oracle, the displayed
// four-term recurrences, and the operator symmetry checks.
//
// For descending bases (delta = -1) the operator action is local only in the
// reciprocal variable y = 1/x: y^2 A(1/y) picks up the factor (1 - c y)
// because the basis center c is a root of A, so the residual is projected
// after multiplication by x^{-2}. For ascending bases the residual is
// projected directly. In both pictures the window invariant is the same:
// residual components with index <= N - w vanish exactly.

#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "vq/basis.hpp"
#include "vq/catalog.hpp"
#include "vq/equations.hpp"

namespace vq {

struct VerificationReport {
    SolutionId id;
    int N = 0;
    int window = 0;
    std::vector<Rat> components;
    Lp overflow;
    bool pass = false;
    std::optional<int> first_nonzero_index;  // smallest asserted index that is nonzero
};

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id.str();
    j["N"] = r.N;
    j["window"] = r.window;
    j["pass"] = r.pass;
    if (r.first_nonzero_index)
        j["first_nonzero_index"] = *r.first_nonzero_index;
    else
        j["first_nonzero_index"] = nullptr;
    auto nz = nlohmann::ordered_json::array();
    for (int m = 0; m < (int)r.components.size(); ++m)
        if (!(r.components[m] == 0)) nz.push_back(m);
    j["components_nonzero"] = nz;
    auto ov = nlohmann::ordered_json::array();
    for (auto& [k, v] : r.overflow.c) ov.push_back(k);
    j["overflow_degrees"] = ov;
    return j;
}

inline VerificationReport verify_solution(const ParamSet& p, const SeriesSolution& sol, int w = 6) {
    const int N = (int)sol.coeffs.size() - 1;
    Op op = build_operator(p);
    Lp S;
    for (int n = 0; n <= N; ++n)
        if (!(sol.coeffs[n] == 0)) S = S + poly_scale(basis_expand(sol.basis, n), sol.coeffs[n]);
    Lp R = apply_operator(op, sol.P, S, p.q);

    const int delta = basis_delta(sol.basis.kind);
    Projection proj;
    if (delta < 0) {
        // Work in the y = 1/x picture: clear the positive-degree content by
        // shifting with x^{-2} before projecting.
        proj = basis_project(R * Lp::monomial(-2, Rat(1)), sol.basis, N + 3);
    } else {
        proj = basis_project(R, sol.basis, N + 2);
    }

    VerificationReport rep;
    rep.id = sol.id;
    rep.N = N;
    rep.window = w;
    rep.components = std::move(proj.components);
    rep.overflow = std::move(proj.overflow);
    rep.pass = true;
    const bool terminated = sol.terminated_at.has_value();
    const int asserted_max = terminated ? (int)rep.components.size() - 1 : N - w;
    for (int m = 0; m <= asserted_max && m < (int)rep.components.size(); ++m) {
        if (!(rep.components[m] == 0)) {
            rep.pass = false;
            if (!rep.first_nonzero_index) rep.first_nonzero_index = m;
        }
    }
    if (terminated && !rep.overflow.is_zero()) rep.pass = false;
    if (!terminated && !rep.overflow.is_zero()) {
        // Overflow encodes the truncation tail; it is reported, never
        // asserted, but must stay outside the basis span.
        for (auto& [k, v] : rep.overflow.c) {
            if (delta < 0 ? (k <= 0) : (k >= 0)) rep.pass = false;
        }
    }
    return rep;
}

// Independent oracle: solve for the unique normalized formal solution in the
// given basis, component by component, with c_0 = 1. The (operator, basis)
// pair must be banded with radius r <= w; the empirical radius is measured
// during the solve.
struct RecurrenceResult {
    std::vector<Rat> coeffs;
    int band_radius = 0;
};

inline RecurrenceResult recurrence_solve(const ParamSet& p, const Rat& P,
                                         const BasisDescriptor& basis, int N, int w = 6) {
    Op op = build_operator(p);
    const int delta = basis_delta(basis.kind);
    const int NE = N + 8;       // extra elements so that used equations are complete
    const int M = NE + 3;       // component range 0..M
    std::vector<std::vector<Rat>> E;  // E[n][m]: projected action of op on phi_n
    E.reserve(NE + 1);
    int band = 0;
    for (int n = 0; n <= NE; ++n) {
        Lp R = apply_operator(op, P, basis_expand(basis, n), p.q);
        Projection proj = delta < 0 ? basis_project(R * Lp::monomial(-2, Rat(1)), basis, M)
                                    : basis_project(R, basis, M);
        if (!proj.overflow.is_zero())
            throw resonance_error("recurrence_solve: action of the operator leaves the basis span");
        for (int m = 0; m <= M; ++m)
            if (!(proj.components[m] == 0) && std::abs(m - n) > band) band = std::abs(m - n);
        E.push_back(std::move(proj.components));
    }
    if (band > w)
        throw resonance_error("recurrence_solve: band radius " + std::to_string(band) +
                              " exceeds window " + std::to_string(w));

    std::vector<Rat> sol(N + 1, Rat(0));
    sol[0] = Rat(1);
    for (int n = 1; n <= N; ++n) {
        bool solved = false;
        for (int m = 0; m <= M && !solved; ++m) {
            // use the equation at component m if its highest contributing
            // unknown is exactly n
            int top = -1;
            for (int k = NE; k >= 0; --k)
                if (!(E[k][m] == 0)) {
                    top = k;
                    break;
                }
            if (top != n) continue;
            if (E[n][m] == 0) continue;
            Rat rhs(0);
            for (int k = 0; k < n; ++k)
                if (!(E[k][m] == 0)) rhs -= sol[k] * E[k][m];
            sol[n] = rhs / E[n][m];
            solved = true;
        }
        if (!solved)
            throw resonance_error("recurrence_solve: no pivot equation for coefficient " +
                                  std::to_string(n) + " (resonant parameters)");
    }
    return {std::move(sol), band};
}

// The two displayed four-term recurrences. `confluent = false` checks the
// degree-two version (with both (1 - Lam a2 q^{...}) factors), `true` checks
// the singly confluent version (those factors dropped). Coefficients with
// n < 0 are treated as zero.
inline bool verify_four_term_recurrence(const ParamSet& p, const std::vector<Rat>& a,
                                        bool confluent) {
    const Rat q = p.q;
    const Rat E1 = q * *p.A1 / *p.L1;
    const Rat E2 = q * *p.A2 * p.t2 / (*p.L1 * p.t1);
    const Rat La1 = *p.Lam * *p.a1;
    const Rat La2 = confluent ? Rat(0) : *p.Lam * *p.a2;
    auto at = [&](int n) { return n < 0 ? Rat(0) : a[n]; };
    auto lam_factor = [&](int shift, int n) {
        if (confluent) return Rat(1) - La1 * powi(q, n + shift);
        return (Rat(1) - La1 * powi(q, n + shift)) * (Rat(1) - La2 * powi(q, n + shift));
    };
    const int N = (int)a.size() - 1;
    for (int n = 0; n + 1 <= N; ++n) {
        Rat lhs = (Rat(1) - E1 * powi(q, n)) * (Rat(1) - E2 * powi(q, n)) *
                      (Rat(1) - powi(q, n + 1)) * at(n + 1) -
                  q * lam_factor(0, n) * at(n) -
                  powi(q, 3) * (Rat(1) + Rat(1) / q) * (Rat(1) - E1 * powi(q, n - 1)) *
                      (Rat(1) - E2 * powi(q, n - 1)) * (Rat(1) - powi(q, n)) * at(n) +
                  powi(q, 4) * (Rat(1) + Rat(1) / q) * lam_factor(-1, n) * at(n - 1) +
                  powi(q, 5) * (Rat(1) - E1 * powi(q, n - 2)) * (Rat(1) - E2 * powi(q, n - 2)) *
                      (Rat(1) - powi(q, n - 1)) * at(n - 1) -
                  powi(q, 6) * lam_factor(-2, n) * at(n - 2);
        if (lhs != 0) return false;
    }
    return true;
}

// Operator symmetry: B02 is invariant under (t1, A1) <-> (t2, A2); B20 is
// invariant under (t1, L1) <-> (t2, L2).
inline bool verify_symmetry(const ParamSet& p) {
    ParamSet sw = p;
    if (p.family == Family::B02) {
        std::swap(sw.t1, sw.t2);
        std::swap(sw.A1, sw.A2);
    } else if (p.family == Family::B20) {
        std::swap(sw.t1, sw.t2);
        std::swap(sw.L1, sw.L2);
    } else {
        return false;
    }
    Op a = build_operator(p), b = build_operator(sw);
    return a.A == b.A && a.B == b.B && a.C == b.C;
}

}  // namespace vq
