#include "figures.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "onset/dynamics.hpp"
#include "onset/io.hpp"
#include "onset/scenarios.hpp"

namespace onset::cli {

namespace {

std::string tag(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

void append(Trajectory& t, std::string name, std::vector<double> column) {
    t.names.push_back(std::move(name));
    t.columns.push_back(std::move(column));
}

// Field fragility of the vacuum-coupled mode for five detector populations:
// converged numerics next to the coefficient-8 transient and the circulated
// (6+sqrt(2)) variant, so the disagreement stays visible.
FigureFile figure1() {
    const auto grid = linspace(1.5, 50);
    Trajectory out;
    out.times.assign(grid.begin(), grid.end());
    const std::vector<std::string> field_only{"f2"};
    for (double delta : {0.1, 0.2, 0.3, 0.4, 0.5}) {
        UdwParams p;
        p.alpha = 0.25;
        p.delta = delta;
        const auto run = udw_numeric(p, grid, field_only);
        append(out, "numeric_delta" + tag(delta), run.traj.series("f2"));
        std::vector<double> model(grid.size()), stated(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            model[i] = udw_field_fragility_model(delta, grid[i],
                                                 udw_field_coeff_verified);
            stated[i] = udw_field_fragility_exact(delta, grid[i]);
        }
        append(out, "exact_delta" + tag(delta), std::move(model));
        append(out, "stated_delta" + tag(delta), std::move(stated));
    }
    return {"figure1.csv", trajectory_csv(out)};
}

// Thermal fragility against beta*omega; the t column carries beta*omega.
FigureFile figure2() {
    return {"figure2.csv",
            trajectory_csv(thermal_sweep(1.0, 1.0, 0.1, 10.0, 60, 128))};
}

// Non-commuting qubit pair: mixedness and coherence for the four corner
// choices of (r, s), closed forms next to the numerics.
FigureFile figure3() {
    const auto grid = linspace(6.3, 60);
    Trajectory out;
    out.times.assign(grid.begin(), grid.end());
    const std::pair<double, double> corners[] = {
        {0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
    for (const auto& [r, s] : corners) {
        Case2Params p;
        p.r = r;
        p.s = s;
        const auto traj = case2_scenario(p, grid);
        const std::string suffix = "_r" + tag(r) + "_s" + tag(s);
        for (const char* base : {"mixedness", "coherence"}) {
            append(out, base + suffix + "_numeric",
                   traj.series(std::string(base) + "_numeric"));
            append(out, base + suffix + "_closed",
                   traj.series(std::string(base) + "_closed"));
        }
    }
    return {"figure3.csv", trajectory_csv(out)};
}

// Qubit and field fragility for three (alpha, delta) pairs, showing that
// the qubit curve follows alpha alone and the field curve delta alone.
FigureFile figure4() {
    const auto grid = linspace(1.5, 50);
    Trajectory out;
    out.times.assign(grid.begin(), grid.end());
    const std::vector<std::string> chans{"f2_A", "f2"};
    const std::pair<double, double> pairs[] = {
        {0.25, 0.2}, {0.25, 0.4}, {0.35, 0.2}};
    for (const auto& [alpha, delta] : pairs) {
        UdwParams p;
        p.alpha = alpha;
        p.delta = delta;
        const auto run = udw_numeric(p, grid, chans);
        const std::string suffix = "_alpha" + tag(alpha) + "_delta" + tag(delta);
        append(out, "qubit" + suffix, run.traj.series("f2_A"));
        append(out, "field" + suffix, run.traj.series("f2"));
    }
    return {"figure4.csv", trajectory_csv(out)};
}

// Fragility against the conserved variance on both sides of the coupling;
// the ratio columns stay at or below 1.
FigureFile figure5() {
    const auto grid = linspace(1.5, 50);
    UdwParams p;
    p.alpha = 0.3;
    p.delta = 0.3;
    const std::vector<std::string> chans{"f2_A", "f2", "variance_A",
                                         "variance"};
    const auto run = udw_numeric(p, grid, chans);
    Trajectory out = run.traj;
    std::vector<double> rq(grid.size()), rf(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rq[i] = out.series("f2_A")[i] / out.series("variance_A")[i];
        rf[i] = out.series("f2")[i] / out.series("variance")[i];
    }
    append(out, "ratio_qubit", std::move(rq));
    append(out, "ratio_field", std::move(rf));
    return {"figure5.csv", trajectory_csv(out)};
}

// Fock-superposition environment: qubit mixedness and coherence exchange
// under a number-operator coupling for three environment choices.
FigureFile figure6() {
    const auto grid = linspace(6.3, 60);
    Trajectory out;
    out.times.assign(grid.begin(), grid.end());
    struct Combo {
        cplx r, p, s;
    };
    const Combo combos[] = {{0.5, 0.2, 0.0}, {1.0, 0.5, 1.0}, {0.2, 0.0, 0.7}};
    int index = 0;
    for (const auto& c : combos) {
        FockEnvParams p;
        p.r = c.r;
        p.p = c.p;
        p.s = c.s;
        const auto traj = fock_env_scenario(p, grid);
        const std::string suffix = "_env" + std::to_string(++index);
        for (const char* base :
             {"purity", "mixedness", "coherence", "variance"})
            append(out, base + suffix, traj.series(base));
    }
    return {"figure6.csv", trajectory_csv(out)};
}

}  // namespace

std::vector<FigureFile> build_figures() {
    return {figure1(), figure2(), figure3(), figure4(), figure5(), figure6()};
}

}  // namespace onset::cli
