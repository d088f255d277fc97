#pragma once
// Multiplicative generator parameterization of the five equation families.
// Every q-power parameter is stored as the exact rational value of the
// corresponding generator: s = q^{1/2}, A_i = q^{h_i}, L_i = q^{l_i},
// a_i = q^{alpha_i}, Lam = q^{lambda}. This avoids irrational q^h values
// entirely: all displayed equation coefficients are Laurent monomials in the
// generators.

#include <nlohmann/json.hpp>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vq/rational.hpp"

namespace vq {

enum class Family { D2, C12, B02, C21, B20 };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::D2: return "D2";
        case Family::C12: return "C12";
        case Family::B02: return "B02";
        case Family::C21: return "C21";
        case Family::B20: return "B20";
    }
    return "?";
}

inline std::optional<Family> family_parse(const std::string& s) {
    if (s == "D2") return Family::D2;
    if (s == "C12") return Family::C12;
    if (s == "B02") return Family::B02;
    if (s == "C21") return Family::C21;
    if (s == "B20") return Family::B20;
    return std::nullopt;
}

// Generators present per family; omitted generators are absent (nullopt).
//   D2  : all, with the constraint Lam^2 L1 L2 a1 a2 = q A1 A2
//   C12 : omits L2, a2
//   B02 : omits L1, L2, a2
//   C21 : omits A2, a2
//   B20 : omits A1, A2, a2
struct ParamSet {
    Family family = Family::D2;
    Rat q, s, t1, t2;
    std::optional<Rat> A1, A2, L1, L2, a1, a2, Lam;
};

inline std::vector<std::string> family_generators(Family f) {
    switch (f) {
        case Family::D2: return {"A1", "A2", "L1", "L2", "a1", "a2", "Lam"};
        case Family::C12: return {"A1", "A2", "L1", "a1", "Lam"};
        case Family::B02: return {"A1", "A2", "a1", "Lam"};
        case Family::C21: return {"A1", "L1", "L2", "a1", "Lam"};
        case Family::B20: return {"L1", "L2", "a1", "Lam"};
    }
    return {};
}

inline std::optional<Rat>* param_field(ParamSet& p, const std::string& name) {
    if (name == "A1") return &p.A1;
    if (name == "A2") return &p.A2;
    if (name == "L1") return &p.L1;
    if (name == "L2") return &p.L2;
    if (name == "a1") return &p.a1;
    if (name == "a2") return &p.a2;
    if (name == "Lam") return &p.Lam;
    return nullptr;
}

inline const std::optional<Rat>* param_field(const ParamSet& p, const std::string& name) {
    return param_field(const_cast<ParamSet&>(p), name);
}

// Returns the list of violated constraints (empty means valid).
inline std::vector<std::string> check_constraints(const ParamSet& p) {
    std::vector<std::string> bad;
    if (p.s * p.s != p.q) bad.push_back("s^2 != q");
    if (p.q == 0 || p.q == 1) bad.push_back("q in {0,1}");
    if (p.t1 == 0) bad.push_back("t1 = 0");
    if (p.t2 == 0) bad.push_back("t2 = 0");
    auto used = family_generators(p.family);
    for (auto& name : used) {
        auto* f = param_field(p, name);
        if (!f->has_value())
            bad.push_back("missing generator " + name);
        else if (f->value() == 0)
            bad.push_back("zero generator " + name);
    }
    for (auto& name : {"A1", "A2", "L1", "L2", "a1", "a2", "Lam"}) {
        bool in_use = false;
        for (auto& u : used) in_use = in_use || (u == name);
        if (!in_use && param_field(p, name)->has_value())
            bad.push_back(std::string("unused generator ") + name);
    }
    if (p.family == Family::D2 && bad.empty()) {
        Rat lhs = *p.Lam * *p.Lam * *p.L1 * *p.L2 * *p.a1 * *p.a2;
        Rat rhs = p.q * *p.A1 * *p.A2;
        if (lhs != rhs) bad.push_back("Lam^2 L1 L2 a1 a2 != q A1 A2");
    }
    return bad;
}

// ---------------------------------------------------------------------------
// JSON (de)serialization. Keys absent when the family omits the generator.
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json params_to_json(const ParamSet& p) {
    nlohmann::ordered_json j;
    j["family"] = family_name(p.family);
    j["q"] = rat_str(p.q);
    j["s"] = rat_str(p.s);
    j["t1"] = rat_str(p.t1);
    j["t2"] = rat_str(p.t2);
    for (auto& name : family_generators(p.family)) {
        j[name] = rat_str(param_field(p, name)->value());
    }
    return j;
}

inline ParamSet params_from_json(const nlohmann::json& j) {
    ParamSet p;
    auto fam = family_parse(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("unknown family: " + j.at("family").dump());
    p.family = *fam;
    p.q = rat_parse(j.at("q").get<std::string>());
    p.s = rat_parse(j.at("s").get<std::string>());
    p.t1 = rat_parse(j.at("t1").get<std::string>());
    p.t2 = rat_parse(j.at("t2").get<std::string>());
    for (auto& name : family_generators(p.family)) {
        *param_field(p, name) = rat_parse(j.at(name).get<std::string>());
    }
    return p;
}

// ---------------------------------------------------------------------------
// Random admissible sampling: numerators/denominators uniform in [1, 64],
// q in (0, 1) via s = num/den with num < den. For D2, L2 is derived from the
// constraint so no rational square roots are ever needed.
// ---------------------------------------------------------------------------

inline Rat sample_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(1, 64);
    return Rat(d(rng), d(rng));
}

inline Rat sample_s(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(1, 64);
    for (;;) {
        int num = d(rng), den = d(rng);
        if (num < den) return Rat(num, den);
    }
}

inline ParamSet sample_params(Family fam, std::mt19937_64& rng) {
    ParamSet p;
    p.family = fam;
    p.s = sample_s(rng);
    p.q = p.s * p.s;
    p.t1 = sample_rat(rng);
    p.t2 = sample_rat(rng);
    for (auto& name : family_generators(fam)) {
        *param_field(p, name) = sample_rat(rng);
    }
    if (fam == Family::D2) {
        // derive L2 = q A1 A2 / (L1 a1 a2 Lam^2)
        p.L2 = p.q * *p.A1 * *p.A2 / (*p.L1 * *p.a1 * *p.a2 * *p.Lam * *p.Lam);
    }
    return p;
}

// Stable seed derivation: FNV-1a of a label, mixed with a trial index and a
// user seed, so reports are byte-identical for identical configs.
inline std::uint64_t derive_seed(const std::string& label, std::uint64_t user_seed,
                                 std::uint64_t trial) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : label) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    h ^= user_seed + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
    h ^= trial * 0xbf58476d1ce4e5b9ULL;
    return h;
}

}  // namespace vq
