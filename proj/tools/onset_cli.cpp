// onset_cli.cpp - command-line front end: scenario runs to CSV, single-state
// diagnostics, randomized verification suites, and figure reproduction.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "figures.hpp"
#include "onset/diagnostics.hpp"
#include "onset/dynamics.hpp"
#include "onset/fragility.hpp"
#include "onset/io.hpp"
#include "onset/scenarios.hpp"
#include "onset/states.hpp"
#include "onset/tolerances.hpp"
#include "verify_suites.hpp"

namespace {

using json = nlohmann::json;
using namespace onset;

// ---------------- config plumbing ----------------

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config: " + path);
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::exception& e) {
        throw IoError("cannot parse config " + path + ": " + e.what());
    }
    if (!cfg.is_object())
        throw std::invalid_argument("config: top level must be an object");
    return cfg;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const char* where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known |= (key == a);
        if (!known)
            throw std::invalid_argument(std::string("config: unknown key '") +
                                        key + "' in " + where);
    }
}

double number_at(const json& obj, const char* name, double fallback) {
    if (!obj.contains(name)) return fallback;
    if (!obj[name].is_number())
        throw std::invalid_argument(std::string("config: ") + name +
                                    " must be a number");
    return obj[name].get<double>();
}

cplx cplx_at(const json& obj, const char* name, cplx fallback) {
    if (!obj.contains(name)) return fallback;
    const json& j = obj[name];
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw std::invalid_argument(std::string("config: ") + name +
                                " must be a number or [re, im]");
}

std::size_t size_at(const json& obj, const char* name, std::size_t fallback) {
    if (!obj.contains(name)) return fallback;
    if (!obj[name].is_number_unsigned())
        throw std::invalid_argument(std::string("config: ") + name +
                                    " must be a nonnegative integer");
    return obj[name].get<std::size_t>();
}

struct CommonConfig {
    json params = json::object();
    double t_max = 0.0;
    std::size_t points = 50;
    std::size_t fock_dim = 0;  // 0: scenario default
    double trunc_tol = tol::truncation;
};

CommonConfig common_config(const json& cfg, const std::string& name,
                           double default_t_max, bool allow_grid_t = true) {
    check_keys(cfg, {"scenario", "params", "grid", "fock_dim", "tolerances"},
               "config");
    if (cfg.contains("scenario") && cfg["scenario"] != name)
        throw std::invalid_argument("config: scenario field says '" +
                                    cfg["scenario"].get<std::string>() +
                                    "' but the command line asked for '" +
                                    name + "'");
    CommonConfig out;
    out.t_max = default_t_max;
    if (cfg.contains("params")) {
        if (!cfg["params"].is_object())
            throw std::invalid_argument("config: params must be an object");
        out.params = cfg["params"];
    }
    if (cfg.contains("grid")) {
        const json& g = cfg["grid"];
        check_keys(g, {"t_max", "points"}, "grid");
        if (g.contains("t_max") && !allow_grid_t)
            throw std::invalid_argument(
                "config: " + name +
                " sweeps beta*omega; set params.bw_min/bw_max, not "
                "grid.t_max");
        out.t_max = number_at(g, "t_max", out.t_max);
        out.points = size_at(g, "points", out.points);
    }
    out.fock_dim = size_at(cfg, "fock_dim", 0);
    if (cfg.contains("tolerances")) {
        const json& t = cfg["tolerances"];
        check_keys(t, {"truncation"}, "tolerances");
        out.trunc_tol = number_at(t, "truncation", out.trunc_tol);
        if (out.trunc_tol <= 0.0)
            throw std::invalid_argument(
                "config: tolerances.truncation must be positive");
    }
    return out;
}

// ---------------- scenario runners ----------------

std::string run_case1(const json& cfg) {
    const auto c = common_config(cfg, "case1", 3.2);
    check_keys(c.params, {"r", "s", "eps", "b_gap"}, "params");
    Case1Params p;
    p.r = cplx_at(c.params, "r", p.r);
    p.s = cplx_at(c.params, "s", p.s);
    p.eps = number_at(c.params, "eps", p.eps);
    p.b_gap = number_at(c.params, "b_gap", p.b_gap);
    return trajectory_csv(case1_scenario(p, linspace(c.t_max, c.points)));
}

std::string run_case2(const json& cfg) {
    const auto c = common_config(cfg, "case2", 6.3);
    check_keys(c.params, {"r", "s", "eps"}, "params");
    Case2Params p;
    p.r = cplx_at(c.params, "r", p.r);
    p.s = cplx_at(c.params, "s", p.s);
    p.eps = number_at(c.params, "eps", p.eps);
    return trajectory_csv(case2_scenario(p, linspace(c.t_max, c.points)));
}

std::string run_fock_env(const json& cfg) {
    const auto c = common_config(cfg, "fock-env", 6.3);
    check_keys(c.params, {"r", "p", "s", "eps"}, "params");
    FockEnvParams p;
    p.r = cplx_at(c.params, "r", p.r);
    p.p = cplx_at(c.params, "p", p.p);
    p.s = cplx_at(c.params, "s", p.s);
    p.eps = number_at(c.params, "eps", p.eps);
    if (c.fock_dim) p.fock_dim = c.fock_dim;
    return trajectory_csv(fock_env_scenario(p, linspace(c.t_max, c.points)));
}

std::string run_udw(const json& cfg) {
    const auto c = common_config(cfg, "udw", 1.5);
    check_keys(c.params, {"alpha", "delta", "nu"}, "params");
    UdwParams p;
    p.alpha = cplx_at(c.params, "alpha", p.alpha);
    p.delta = number_at(c.params, "delta", p.delta);
    p.nu = number_at(c.params, "nu", p.nu);
    if (c.fock_dim) p.fock_dim = c.fock_dim;
    const std::vector<std::string> channels{"f2_A", "f2",         "purity_A",
                                            "purity_B", "variance_A",
                                            "variance"};
    const auto run = udw_numeric(p, linspace(c.t_max, c.points), channels,
                                 c.trunc_tol);
    std::cerr << "truncation converged at fock dim " << run.fock_dim
              << " (deviation " << run.max_deviation << ")\n";
    return trajectory_csv(run.traj);
}

std::string run_thermal_sweep(const json& cfg) {
    const auto c = common_config(cfg, "thermal-sweep", 0.0, false);
    check_keys(c.params, {"omega", "nu", "bw_min", "bw_max"}, "params");
    const double omega = number_at(c.params, "omega", 1.0);
    const double nu = number_at(c.params, "nu", 1.0);
    const double bw_min = number_at(c.params, "bw_min", 0.1);
    const double bw_max = number_at(c.params, "bw_max", 10.0);
    const std::size_t dim = c.fock_dim ? c.fock_dim : 128;
    return trajectory_csv(
        thermal_sweep(omega, nu, bw_min, bw_max, c.points, dim));
}

std::string run_fragility_comparison(const json& cfg) {
    const auto c = common_config(cfg, "fragility-comparison", 1.5);
    check_keys(c.params, {"alpha", "delta", "alpha_alt", "delta_alt", "nu"},
               "params");
    UdwParams base;
    base.alpha = cplx_at(c.params, "alpha", 0.25);
    base.delta = number_at(c.params, "delta", 0.3);
    base.nu = number_at(c.params, "nu", 1.0);
    if (c.fock_dim) base.fock_dim = c.fock_dim;
    UdwParams alt_alpha = base;
    alt_alpha.alpha = cplx_at(c.params, "alpha_alt", 0.35);
    UdwParams alt_delta = base;
    alt_delta.delta = number_at(c.params, "delta_alt", 0.15);

    const auto grid = linspace(c.t_max, c.points);
    const std::vector<std::string> chans{"f2_A", "f2"};
    Trajectory out;
    out.times.assign(grid.begin(), grid.end());
    const std::pair<const char*, const UdwParams*> runs[] = {
        {"base", &base}, {"alt_alpha", &alt_alpha}, {"alt_delta", &alt_delta}};
    for (const auto& [label, params] : runs) {
        const auto run = udw_numeric(*params, grid, chans, c.trunc_tol);
        std::cerr << label << ": truncation converged at fock dim "
                  << run.fock_dim << " (deviation " << run.max_deviation
                  << ")\n";
        out.names.push_back(std::string("qubit_") + label);
        out.columns.push_back(run.traj.series("f2_A"));
        out.names.push_back(std::string("field_") + label);
        out.columns.push_back(run.traj.series("f2"));
    }
    return trajectory_csv(out);
}

std::string run_scenario(const std::string& name, const json& cfg) {
    if (name == "case1") return run_case1(cfg);
    if (name == "case2") return run_case2(cfg);
    if (name == "fock-env") return run_fock_env(cfg);
    if (name == "udw") return run_udw(cfg);
    if (name == "thermal-sweep") return run_thermal_sweep(cfg);
    return run_fragility_comparison(cfg);
}

// ---------------- diag ----------------

std::string run_diag(const std::string& state_path, const std::string& obs_path,
                     int extra_n, bool all) {
    const auto rho = DensityMatrix::validated(read_matrix_json(state_path));
    const HermitianObservable b(read_matrix_json(obs_path));

    std::vector<std::pair<std::string, double>> row;
    row.emplace_back("purity", purity(rho));
    row.emplace_back("mixedness", mixedness(rho));
    row.emplace_back("coherence", coherence_2norm(rho, b));
    row.emplace_back("variance", variance(rho, b));
    try {
        row.emplace_back("f1", fragility_1(rho, b));
    } catch (const NearPureDivergence& e) {
        std::cerr << "f1 diverges: eigenvalue " << e.eigenvalue()
                  << " sits below the log floor; reporting nan\n";
        row.emplace_back("f1", std::nan(""));
    }
    row.emplace_back("f2", fragility_2(rho, b));
    const auto push_fn = [&](int n) {
        const std::string name = "f" + std::to_string(n);
        for (const auto& [key, value] : row)
            if (key == name) return;
        row.emplace_back(name, fragility_n(rho, b, n));
    };
    if (extra_n > 0) {
        if (extra_n < 2)
            throw std::invalid_argument("diag: --n takes an order >= 2");
        push_fn(extra_n);
    }
    if (all) {
        push_fn(3);
        push_fn(4);
        row.emplace_back("renyi2", renyi_entropy(rho, 2));
        row.emplace_back("renyi3", renyi_entropy(rho, 3));
        row.emplace_back("vn", von_neumann_entropy(rho));
    }

    std::string header, values;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) {
            header += ',';
            values += ',';
        }
        header += row[i].first;
        values += csv_value(row[i].second);
    }
    return header + "\n" + values + "\n";
}

// ---------------- output plumbing ----------------

void emit(const std::string& data, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << data))
        throw IoError("cannot write " + out_path);
}

std::string tolerance_footer() {
    char buf[640];
    std::snprintf(
        buf, sizeof(buf),
        "Default tolerances (overridable per run via the config key\n"
        "\"tolerances\", e.g. {\"tolerances\": {\"truncation\": 1e-9}}):\n"
        "  hermitian deviation     %.0e\n"
        "  trace deviation         %.0e\n"
        "  negative-eigenvalue slack %.0e\n"
        "  degenerate gap (relative) %.0e\n"
        "  imaginary residue       %.0e\n"
        "  log floor (f1 domain)   %.0e\n"
        "  fd step                 %.0e\n"
        "  truncation convergence  %.0e (doubling caps at dim %d)\n"
        "Environment: ONSET_OUT_DIR sets the default --outdir of `figures`.\n"
        "Exit codes: 0 ok, 1 usage or invalid input, 2 numerical\n"
        "verification failure, 3 I/O or parse error.",
        tol::hermitian, tol::trace_one, tol::psd_slack, tol::degenerate_gap,
        tol::imag_residue, tol::log_floor, tol::fd_step, tol::truncation,
        static_cast<int>(tol::truncation_max_dim));
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "onset: purity, entropy, coherence, and fragility diagnostics for "
        "product interactions"};
    app.require_subcommand(1);
    app.footer(tolerance_footer());

    // scenario
    auto* sc = app.add_subcommand(
        "scenario", "Run a named scenario and emit its trajectory CSV");
    std::string scenario_name;
    std::string config_path;
    std::string out_path;
    sc->add_option("name", scenario_name, "Scenario name")
        ->required()
        ->check(CLI::IsMember({"case1", "case2", "fock-env", "udw",
                               "thermal-sweep", "fragility-comparison"}));
    sc->add_option("--config", config_path,
                   "JSON config: {\"scenario\", \"params\", \"grid\": "
                   "{\"t_max\", \"points\"}, \"fock_dim\", \"tolerances\"}");
    sc->add_option("--out", out_path, "Output CSV path (default: stdout)");

    // diag
    auto* dg = app.add_subcommand(
        "diag", "Diagnostics of one state against one observable, as CSV");
    std::string state_path, obs_path;
    int extra_n = 0;
    bool all = false;
    dg->add_option("--state", state_path, "Density matrix JSON file")
        ->required();
    dg->add_option("--obs", obs_path, "Hermitian observable JSON file")
        ->required();
    dg->add_option("--n", extra_n, "Also report the order-n fragility");
    dg->add_flag("--all", all,
                 "Also report f3, f4, Renyi-2/3 and von Neumann entropies");
    std::string diag_out;
    dg->add_option("--out", diag_out, "Output CSV path (default: stdout)");

    // verify
    auto* vf = app.add_subcommand(
        "verify", "Run randomized invariant suites and report worst residuals");
    std::string suite = "all";
    onset::cli::VerifyOptions vopt;
    vf->add_option("--suite", suite, "onset|bounds|scenarios|all")
        ->check(CLI::IsMember({"onset", "bounds", "scenarios", "all"}));
    vf->add_option("--seed", vopt.seed, "RNG seed (default 20260818)");
    vf->add_option("--trials", vopt.trials,
                   "Trial count (default: per-suite)");

    // figures
    auto* fg = app.add_subcommand(
        "figures", "Emit figure-reproduction CSVs (figure1..figure6)");
    std::string outdir;
    fg->add_option("--outdir", outdir,
                   "Output directory (default: $ONSET_OUT_DIR or .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sc->parsed()) {
            emit(run_scenario(scenario_name, load_config(config_path)),
                 out_path);
        } else if (dg->parsed()) {
            emit(run_diag(state_path, obs_path, extra_n, all), diag_out);
        } else if (vf->parsed()) {
            bool ok = true;
            if (suite == "onset" || suite == "all")
                ok &= onset::cli::verify_onset(vopt, std::cout);
            if (suite == "bounds" || suite == "all")
                ok &= onset::cli::verify_bounds(vopt, std::cout);
            if (suite == "scenarios" || suite == "all")
                ok &= onset::cli::verify_scenarios(vopt, std::cout);
            if (!ok) {
                std::cerr << "verification failed\n";
                return 2;
            }
        } else if (fg->parsed()) {
            if (outdir.empty()) {
                const char* env = std::getenv("ONSET_OUT_DIR");
                outdir = env && *env ? env : ".";
            }
            std::error_code ec;
            std::filesystem::create_directories(outdir, ec);
            if (ec) throw IoError("cannot create " + outdir);
            for (const auto& fig : onset::cli::build_figures()) {
                const auto path =
                    (std::filesystem::path(outdir) / fig.name).string();
                emit(fig.csv, path);
                std::cerr << "wrote " << path << "\n";
            }
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const TruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NearPureDivergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
