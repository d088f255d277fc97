// Batch verification runner and report emitter.
//
// Subcommands:
//   catalog      list the solution catalog as JSON
//   verify       residual-check catalog entries over random parameter draws
//   degenerate   check the four confluence arrows between families
//   limit        q -> 1 convergence tables and operator Taylor checks
//   gauge-check  gauge roundtrips and the two cross-family correspondences
//
// Exit codes: 0 pass, 1 check failure, 2 usage/config error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <thread>

#include "vq/gauge.hpp"
#include "vq/limits.hpp"
#include "vq/verify.hpp"

using nlohmann::ordered_json;
using namespace vq;

namespace {

constexpr int kResampleBudget = 20;

// Deterministic parallel map: index i is handled by worker i % jobs and the
// results land in a preallocated slot, so output order is independent of
// scheduling.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> ws;
    for (int t = 0; t < jobs; ++t)
        ws.emplace_back([&, t] {
            for (int i = t; i < n; i += jobs) fn(i);
        });
    for (auto& w : ws) w.join();
}

// Draw admissible parameters and run f, resampling on degenerate or resonant
// draws up to a fixed budget.
template <class F>
auto with_resample(Family fam, std::uint64_t seed, F f) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0;; ++attempt) {
        ParamSet p = sample_params(fam, rng);
        try {
            return f(p);
        } catch (const degenerate_error&) {
            if (attempt + 1 >= kResampleBudget) throw;
        } catch (const resonance_error&) {
            if (attempt + 1 >= kResampleBudget) throw;
        }
    }
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        std::string tok = csv.substr(pos, comma - pos);
        if (!tok.empty()) out.push_back(rat_parse(tok));
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty rational list");
    return out;
}

std::vector<long> parse_long_list(const std::string& csv) {
    std::vector<long> out;
    for (const Rat& r : parse_rat_list(csv)) {
        if (denominator(r) != 1) throw std::invalid_argument("expected integer list");
        out.push_back(numerator(r).convert_to<long>());
    }
    return out;
}

std::string rat_approx(const Rat& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", r.convert_to<double>());
    return buf;
}

std::string convergence_csv(const ConvergenceTable& t) {
    std::string s = "eps,max_abs_diff,approx\n";
    for (auto& row : t.rows)
        s += rat_str(row.eps) + "," + rat_str(row.maxdiff) + "," + rat_approx(row.maxdiff) + "\n";
    return s;
}

int cmd_catalog(const std::string& out_path) {
    auto arr = ordered_json::array();
    for (const auto& e : list_catalog()) {
        ordered_json j;
        j["id"] = e.id.str();
        j["prefactor"] = e.mu;
        j["basis"] = basis_kind_name(e.kind);
        j["residual_verifiable"] = e.residual_verifiable;
        arr.push_back(j);
    }
    emit(out_path, arr.dump(2) + "\n");
    return 0;
}

struct VerifyConfig {
    bool all = false;
    std::vector<std::string> ids;
    std::string params_path;
    int order = 16;
    int window = 6;
    int trials = 20;
    std::uint64_t seed = 0;
    std::string out_path;
    int jobs = 1;
};

int cmd_verify(const VerifyConfig& cfg) {
    std::vector<SolutionId> ids;
    if (cfg.all) {
        for (const auto& e : list_catalog())
            if (e.residual_verifiable) ids.push_back(e.id);
    } else {
        for (const auto& s : cfg.ids) {
            auto id = parse_solution_id(s);
            if (!id || !find_catalog_entry(*id))
                throw std::invalid_argument("unknown solution id: " + s);
            ids.push_back(*id);
        }
    }
    if (ids.empty()) throw std::invalid_argument("no solution ids selected (use --all or --id)");

    std::optional<ParamSet> fixed;
    if (!cfg.params_path.empty()) {
        std::ifstream f(cfg.params_path);
        if (!f) throw std::invalid_argument("cannot open params file: " + cfg.params_path);
        nlohmann::json j;
        f >> j;
        fixed = params_from_json(j);
        auto bad = check_constraints(*fixed);
        if (!bad.empty()) throw std::invalid_argument("invalid params: " + bad.front());
    }

    const int trials = fixed ? 1 : cfg.trials;
    std::vector<ordered_json> slots(ids.size() * trials);
    std::vector<char> passed(ids.size() * trials, 0);
    parallel_for((int)(ids.size() * trials), cfg.jobs, [&](int i) {
        const SolutionId& id = ids[i / trials];
        int t = i % trials;
        VerificationReport rep;
        if (fixed) {
            rep = verify_solution(*fixed, construct(id, *fixed, cfg.order), cfg.window);
        } else {
            std::uint64_t s = derive_seed(id.str(), cfg.seed, (std::uint64_t)t);
            rep = with_resample(id.fam, s, [&](const ParamSet& p) {
                return verify_solution(p, construct(id, p, cfg.order), cfg.window);
            });
        }
        slots[i] = report_to_json(rep);
        passed[i] = rep.pass ? 1 : 0;
    });
    auto arr = ordered_json::array();
    bool all_pass = true;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        arr.push_back(std::move(slots[i]));
        all_pass = all_pass && passed[i];
    }
    emit(cfg.out_path, arr.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

int cmd_degenerate(const std::string& arrow_arg, int trials, std::uint64_t seed,
                   const std::string& out_path) {
    std::vector<Arrow> arrows;
    if (arrow_arg == "all") {
        arrows = {Arrow::D2_C12, Arrow::C12_B02, Arrow::D2_C21, Arrow::C21_B20};
    } else {
        auto a = parse_arrow(arrow_arg);
        if (!a) throw std::invalid_argument("unknown arrow name: " + arrow_arg);
        arrows = {*a};
    }
    auto arr = ordered_json::array();
    bool all_pass = true;
    for (Arrow a : arrows) {
        bool pass = true;
        for (int t = 0; t < trials; ++t) {
            std::uint64_t s = derive_seed(arrow_name(a), seed, (std::uint64_t)t);
            auto r = with_resample(arrow_target(a), s,
                                   [&](const ParamSet& p) { return degeneration_check(a, p); });
            pass = pass && r.ok();
        }
        ordered_json j;
        j["arrow"] = arrow_name(a);
        j["trials"] = trials;
        j["pass"] = pass;
        arr.push_back(j);
        all_pass = all_pass && pass;
    }
    emit(out_path, arr.dump(2) + "\n");
    return all_pass ? 0 : 1;
}

int cmd_gauge_check(int trials, std::uint64_t seed, const std::string& out_path) {
    bool corr1 = true, corr2 = true;
    for (int t = 0; t < trials; ++t) {
        corr1 = corr1 && with_resample(Family::C12, derive_seed("corr-C12", seed, t),
                                       [](const ParamSet& p) {
                                           return check_correspondence_C12_C21(p);
                                       });
        corr2 = corr2 && with_resample(Family::B02, derive_seed("corr-B02", seed, t),
                                       [](const ParamSet& p) {
                                           return check_correspondence_B02_B20(p);
                                       });
    }
    // series and equation roundtrips at a fixed draw
    std::mt19937_64 rng(derive_seed("gauge-roundtrip", seed, 0));
    ParamSet p = sample_params(Family::C12, rng);
    const int N = 16;
    Lp S;
    for (int k = 0; k <= N; ++k) S.add_term(k, Rat(2 * k + 1, k + 2));
    Rat alpha(3, 7);
    Lp rt = gauge_series(gauge_series(S, {alpha, GaugeDirection::ATTACH}, p.q, N),
                         {alpha * p.q, GaugeDirection::DETACH}, p.q, N);
    bool series_rt = rt == S;
    Rat ar = Rat(1) / (*p.A2 * p.s * p.t2);
    Op op = build_operator(p);
    Op g = gauge_equation(gauge_equation(op, ar, GaugeSide::A_SIDE, p.q), ar * p.q,
                          GaugeSide::C_SIDE, p.q);
    bool eq_rt = g.A == op.A && g.B == op.B && g.C == op.C;

    ordered_json j;
    j["series_roundtrip"] = series_rt;
    j["equation_roundtrip"] = eq_rt;
    j["correspondence_C12_C21"] = ordered_json{{"trials", trials}, {"pass", corr1}};
    j["correspondence_B02_B20"] = ordered_json{{"trials", trials}, {"pass", corr2}};
    emit(out_path, j.dump(2) + "\n");
    return (series_rt && eq_rt && corr1 && corr2) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification tool for a family of three-term q-difference equations"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --out appear after the subcommand name

    std::string out_path;
    app.add_option("--out", out_path, "Output file (default: stdout)");

    auto* sc_catalog = app.add_subcommand("catalog", "List the solution catalog");

    VerifyConfig vc;
    auto* sc_verify = app.add_subcommand("verify", "Residual-check catalog entries");
    sc_verify->add_flag("--all", vc.all, "Verify every verifiable entry");
    sc_verify->add_option("--id", vc.ids, "Solution id, e.g. C12:T31-ii (repeatable)");
    sc_verify->add_option("--params", vc.params_path, "Fixed parameter JSON file");
    sc_verify->add_option("--order", vc.order, "Series truncation order N");
    sc_verify->add_option("--window", vc.window, "Safety window w");
    sc_verify->add_option("--trials", vc.trials, "Random parameter draws per id");
    sc_verify->add_option("--seed", vc.seed, "Base RNG seed");
    sc_verify->add_option("--jobs", vc.jobs, "Worker thread count");

    std::string arrow_arg = "all";
    int deg_trials = 20;
    std::uint64_t deg_seed = 0;
    auto* sc_deg = app.add_subcommand("degenerate", "Check the confluence arrows");
    sc_deg->add_option("--arrow", arrow_arg, "D2-C12 | C12-B02 | D2-C21 | C21-B20 | all");
    sc_deg->add_option("--trials", deg_trials, "Random parameter draws per arrow");
    sc_deg->add_option("--seed", deg_seed, "Base RNG seed");

    auto* sc_limit = app.add_subcommand("limit", "q -> 1 limit tables and checks");
    sc_limit->require_subcommand(1);
    std::string opt_T = "1/2", opt_t1 = "1/2", opt_eps = "1/10,1/100,1/1000";
    std::string opt_lam = "1", opt_al1 = "1", opt_h1 = "3/2", opt_l1 = "1/2", opt_h2 = "1/2",
                opt_l2 = "1/2";
    int opt_K = 14, opt_degmax = 8;
    bool wrong_sign = false;
    auto add_kummer_opts = [&](CLI::App* sc) {
        sc->add_option("--T", opt_T, "Coupling T (t2 = +/-1/(T eps))");
        sc->add_option("--t1", opt_t1, "Singular point t1");
        sc->add_option("--eps", opt_eps, "Comma-separated eps values");
        sc->add_option("--K", opt_K, "Series truncation order");
        sc->add_option("--degmax", opt_degmax, "Highest compared monomial degree");
        sc->add_option("--lam", opt_lam, "Exponent lambda");
        sc->add_option("--al1", opt_al1, "Exponent alpha1");
        sc->add_option("--h1", opt_h1, "Exponent h1");
        sc->add_option("--l1", opt_l1, "Exponent l1");
    };
    auto* sc_kummer = sc_limit->add_subcommand("kummer", "Confluent-limit convergence table");
    add_kummer_opts(sc_kummer);
    sc_kummer->add_option("--h2", opt_h2, "Exponent h2");
    auto* sc_kummer21 =
        sc_limit->add_subcommand("kummer-c21", "Same table through the type (2,1) family");
    add_kummer_opts(sc_kummer21);
    sc_kummer21->add_option("--l2", opt_l2, "Exponent l2");
    sc_kummer21->add_flag("--wrong-sign", wrong_sign, "Undo the t2 sign flip (divergence demo)");

    std::string opt_B = "2", opt_m = "10,100";
    int opt_HK = 6;
    long hl_lam = 1, hl_al1 = 1, hl_h1 = 2, hl_h2 = -1;
    auto* sc_hermite = sc_limit->add_subcommand("hermite", "Biconfluent coefficient report");
    sc_hermite->add_option("--B", opt_B, "Coupling B (1/t1 = B/m)");
    sc_hermite->add_option("--m", opt_m, "Comma-separated m values (eps = 1/m^2)");
    sc_hermite->add_option("--K", opt_HK, "Number of even coefficients");
    sc_hermite->add_option("--lam", hl_lam, "Exponent lambda (integer)");
    sc_hermite->add_option("--al1", hl_al1, "Exponent alpha1 (integer)");
    sc_hermite->add_option("--h1", hl_h1, "Exponent h1 (integer)");
    sc_hermite->add_option("--h2", hl_h2, "Exponent h2 (integer)");

    long hb_l1 = 1, hb_l2 = 3, hb_al1 = 1, hb_lam = 3;
    auto* sc_hb20 = sc_limit->add_subcommand(
        "hermite-b20", "Taylor check of the type (2,0) operator against its limit ODE");
    sc_hb20->add_option("--B", opt_B, "Coupling B");
    sc_hb20->add_option("--l1", hb_l1, "Exponent l1 (integer)");
    sc_hb20->add_option("--l2", hb_l2, "Exponent l2 (integer)");
    sc_hb20->add_option("--al1", hb_al1, "Exponent alpha1 (integer)");
    sc_hb20->add_option("--lam", hb_lam, "Exponent lambda (integer)");

    int gc_trials = 50;
    std::uint64_t gc_seed = 0;
    auto* sc_gauge = app.add_subcommand("gauge-check", "Gauge roundtrips and correspondences");
    sc_gauge->add_option("--trials", gc_trials, "Random parameter draws per correspondence");
    sc_gauge->add_option("--seed", gc_seed, "Base RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sc_catalog->parsed()) return cmd_catalog(out_path);
        if (sc_verify->parsed()) {
            vc.out_path = out_path;
            return cmd_verify(vc);
        }
        if (sc_deg->parsed()) return cmd_degenerate(arrow_arg, deg_trials, deg_seed, out_path);
        if (sc_gauge->parsed()) return cmd_gauge_check(gc_trials, gc_seed, out_path);
        if (sc_kummer->parsed()) {
            auto t = kummer_limit_study(rat_parse(opt_lam), rat_parse(opt_al1), rat_parse(opt_h1),
                                        rat_parse(opt_l1), rat_parse(opt_h2), rat_parse(opt_t1),
                                        rat_parse(opt_T), parse_rat_list(opt_eps), opt_K,
                                        opt_degmax);
            emit(out_path, convergence_csv(t));
            return t.pass ? 0 : 1;
        }
        if (sc_kummer21->parsed()) {
            auto t = kummer_limit_study_c21(rat_parse(opt_lam), rat_parse(opt_al1),
                                            rat_parse(opt_h1), rat_parse(opt_l1),
                                            rat_parse(opt_l2), rat_parse(opt_t1), rat_parse(opt_T),
                                            parse_rat_list(opt_eps), opt_K, opt_degmax,
                                            wrong_sign);
            emit(out_path, convergence_csv(t));
            return t.pass ? 0 : 1;
        }
        if (sc_hermite->parsed()) {
            auto rep = hermite_limit_report(rat_parse(opt_B), hl_lam, hl_al1, hl_h1, hl_h2,
                                            parse_long_list(opt_m), opt_HK);
            std::string s = "n,target_printed,target_corrected";
            for (long m : rep.ms) s += ",c2n_m" + std::to_string(m);
            s += "\n";
            for (auto& row : rep.rows) {
                s += std::to_string(row.n) + "," + rat_str(row.target_printed) + "," +
                     rat_str(row.target_corrected);
                for (auto& v : row.values) s += "," + rat_approx(v);
                s += "\n";
            }
            emit(out_path, s);
            return 0;  // report only; convergence is not asserted
        }
        if (sc_hb20->parsed()) {
            auto eop = b20_epsilon_operator(rat_parse(opt_B), hb_l1, hb_l2, hb_al1, hb_lam);
            auto tc = run_taylor_check(
                eop, hermite_target_ode(rat_parse(opt_B), Rat(hb_lam), Rat(hb_al1)), 4);
            ordered_json j;
            j["ok"] = tc.ok;
            j["scalar"] = tc.has_scalar ? rat_str(tc.scalar) : "";
            j["detail"] = tc.detail;
            emit(out_path, j.dump(2) + "\n");
            return 0;  // report only
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const degenerate_error& e) {
        std::cerr << "error: resample budget exhausted: " << e.what() << "\n";
        return 1;
    } catch (const resonance_error& e) {
        std::cerr << "error: resample budget exhausted: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
