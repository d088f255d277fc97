#pragma once
// Shared helpers for the test suites: seeded admissible parameter draws with
// a bounded resample budget, and a fixed small fixture used across files.

#include <functional>
#include <random>

#include "vq/catalog.hpp"
#include "vq/params.hpp"
#include "vq/verify.hpp"

namespace vqtest {

inline vq::ParamSet draw_params(vq::Family fam, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return vq::sample_params(fam, rng);
}

// Runs f on admissible draws, resampling (budget 20) when a draw is
// degenerate or resonant for the quantity under test.
template <class F>
auto with_resample(vq::Family fam, std::uint64_t seed, F&& f) {
    for (int attempt = 0;; ++attempt) {
        vq::ParamSet p = draw_params(fam, seed + 1000003ULL * attempt);
        try {
            return f(p);
        } catch (const vq::degenerate_error&) {
            if (attempt >= 20) throw;
        } catch (const vq::resonance_error&) {
            if (attempt >= 20) throw;
        }
    }
}

// Small exactly-known fixture: q = 1/4, s = 1/2, every generator and both
// singular points equal to 1.
inline vq::ParamSet c12_fixture() {
    vq::ParamSet p;
    p.family = vq::Family::C12;
    p.q = vq::Rat(1, 4);
    p.s = vq::Rat(1, 2);
    p.t1 = 1;
    p.t2 = 1;
    p.A1 = 1;
    p.A2 = 1;
    p.L1 = 1;
    p.a1 = 1;
    p.Lam = 1;
    return p;
}

}  // namespace vqtest
