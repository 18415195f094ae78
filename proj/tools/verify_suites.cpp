#include "verify_suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "onset/diagnostics.hpp"
#include "onset/dynamics.hpp"
#include "onset/fragility.hpp"
#include "onset/io.hpp"
#include "onset/matrix.hpp"
#include "onset/ops.hpp"
#include "onset/scenarios.hpp"
#include "onset/states.hpp"
#include "onset/tolerances.hpp"

namespace onset::cli {

namespace {

bool report(std::ostream& out, const char* what, double worst, double bound) {
    const bool ok = worst <= bound;
    char line[160];
    std::snprintf(line, sizeof(line), "[%s] %s: worst %.3e (tol %.1e)\n",
                  ok ? "ok" : "FAIL", what, worst, bound);
    out << line;
    return ok;
}

void note(std::ostream& out, const std::string& text) {
    out << "[info] " << text << "\n";
}

DensityMatrix random_pure(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<cplx> amps(dim);
    for (auto& a : amps) a = cplx(gauss(rng), gauss(rng));
    return pure_state(amps);
}

DensityMatrix floored(const DensityMatrix& rho, double weight) {
    const std::size_t d = rho.mat().dim();
    ComplexMatrix m = (1.0 - weight) * rho.mat();
    for (std::size_t i = 0; i < d; ++i)
        m(i, i) += weight / static_cast<double>(d);
    return DensityMatrix::trusted(std::move(m));
}

cplx random_cplx(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    return {gauss(rng), gauss(rng)};
}

}  // namespace

// ---------------- onset suite ----------------

bool verify_onset(const VerifyOptions& opt, std::ostream& out) {
    const std::size_t trials = opt.trials ? opt.trials : 200;
    std::mt19937_64 rng(opt.seed);

    double worst_dot = 0.0;
    double worst_curv = 0.0;
    double worst_entropy = 0.0;
    double worst_unipartite = 0.0;
    double worst_pure = 0.0;
    std::size_t entropy_checked = 0;

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::size_t da = 2 + rng() % 5;
        const std::size_t db = 2 + rng() % 5;
        const auto rho_a = random_density(da, rng());
        const auto rho_b = floored(random_density(db, rng()), 0.2);
        const ProductInteraction h(random_hermitian(da, rng()),
                                   random_hermitian(db, rng()), 1.0);
        for (int n = 2; n <= 4; ++n) {
            const auto rep = onset_identities(rho_a, rho_b, h, n);
            worst_dot = std::max(worst_dot, std::abs(rep.gamma_dot0));
            worst_curv = std::max(worst_curv, rep.curvature_rel_error);
            worst_unipartite =
                std::max(worst_unipartite, std::abs(rep.unipartite_ddot));
            if (rep.entropy_checked) {
                worst_entropy = std::max(worst_entropy, rep.entropy_rel_error);
                ++entropy_checked;
            }
        }
    }

    // Pure system factor: curvature against -4 (dA)^2 (dB)^2.
    const std::size_t pure_trials = std::max<std::size_t>(trials / 4, 20);
    for (std::size_t trial = 0; trial < pure_trials; ++trial) {
        const std::size_t da = 2 + rng() % 5;
        const std::size_t db = 2 + rng() % 5;
        const auto rho_a = random_density(da, rng());
        const auto rho_b = random_pure(db, rng);
        const ProductInteraction h(random_hermitian(da, rng()),
                                   random_hermitian(db, rng()), 1.0);
        const auto rep = onset_identities(rho_a, rho_b, h, 2);
        if (!rep.system_pure) {
            out << "[FAIL] pure-system onset: purity flag not set\n";
            return false;
        }
        worst_pure = std::max(worst_pure, rep.pure_rel_error);
    }

    note(out, std::to_string(trials) + " random configurations, n in {2,3,4}; "
                  "entropy curvature checked on " +
                  std::to_string(entropy_checked) + " of them");
    bool ok = report(out, "first derivative of tr(rho^n) at t=0", worst_dot,
                     1e-8);
    ok &= report(out, "curvature vs -4 var(A) f_n (relative)", worst_curv,
                 1e-4);
    ok &= report(out, "entropy curvature vs 2 var(A) f_1 (relative)",
                 worst_entropy, 1e-4);
    ok &= report(out, "closed-system curvature of tr(rho^n)", worst_unipartite,
                 1e-8);
    ok &= report(out, "pure-system curvature vs -4 var(A) var(B) (relative)",
                 worst_pure, 1e-6);
    return ok;
}

// ---------------- bounds suite ----------------

bool verify_bounds(const VerifyOptions& opt, std::ostream& out) {
    const std::size_t trials = opt.trials ? opt.trials : 2000;
    std::mt19937_64 rng(opt.seed);

    double worst_excess = -1.0;  // f2 - variance, must stay <= 1e-10
    double worst_form = 0.0;
    double min_f3 = 1e300;
    double min_f4 = 1e300;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::size_t dim = 2 + rng() % 7;
        const auto rho = random_density(dim, rng());
        const HermitianObservable b(random_hermitian(dim, rng()));
        const double f2 = fragility_2(rho, b);
        worst_excess = std::max(worst_excess, f2 - variance(rho, b));
        worst_form =
            std::max(worst_form, std::abs(f2 - fragility_2_eigenbasis(rho, b)));
        if (trial % 4 == 0) {
            min_f3 = std::min(min_f3, fragility_n(rho, b, 3));
            min_f4 = std::min(min_f4, fragility_n(rho, b, 4));
        }
    }

    const std::size_t pure_trials = std::max<std::size_t>(trials / 10, 100);
    double worst_sat = 0.0;
    for (std::size_t trial = 0; trial < pure_trials; ++trial) {
        const std::size_t dim = 2 + rng() % 7;
        const auto rho = random_pure(dim, rng);
        const HermitianObservable b(random_hermitian(dim, rng()));
        worst_sat = std::max(
            worst_sat, std::abs(variance(rho, b) - fragility_2(rho, b)));
    }

    note(out, std::to_string(trials) + " random (state, observable) pairs, "
                  "dims 2 through 8; " +
                  std::to_string(pure_trials) + " pure");
    bool ok = report(out, "max(f_2 - variance) over random states",
                     worst_excess, 1e-10);
    ok &= report(out, "commutator vs eigenbasis form of f_2", worst_form,
                 1e-10);
    ok &= report(out, "pure-state |variance - f_2|", worst_sat, 1e-8);
    ok &= report(out, "max(-f_3) over sampled states", -min_f3, 1e-10);
    ok &= report(out, "max(-f_4) over sampled states", -min_f4, 1e-10);
    return ok;
}

// ---------------- scenarios suite ----------------

namespace {

double column_gap(const Trajectory& t, const char* a, const char* b) {
    const auto& ca = t.series(a);
    const auto& cb = t.series(b);
    double worst = 0.0;
    for (std::size_t i = 0; i < ca.size(); ++i)
        worst = std::max(worst, std::abs(ca[i] - cb[i]));
    return worst;
}

}  // namespace

bool verify_scenarios(const VerifyOptions& opt, std::ostream& out) {
    const std::size_t trials = opt.trials ? opt.trials : 100;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> in(0.0, 1.0);
    bool ok = true;

    {  // case 1: commuting generator, closed forms pointwise
        const auto grid = linspace(3.0, 50);
        double worst_closed = 0.0;
        double worst_sum = 0.0;
        double worst_var = 0.0;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            Case1Params p;
            p.r = random_cplx(rng);
            p.s = random_cplx(rng);
            p.eps = 0.3 + 1.2 * in(rng);
            p.b_gap = 0.5 + 1.5 * in(rng);
            const auto traj = case1_scenario(p, grid);
            for (const char* base : {"mixedness", "coherence", "variance"}) {
                worst_closed = std::max(
                    worst_closed,
                    column_gap(traj, (std::string(base) + "_numeric").c_str(),
                               (std::string(base) + "_closed").c_str()));
            }
            const double sum0 = case1_conserved_sum(p);
            const double var0 = case1_variance(p);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                worst_sum = std::max(
                    worst_sum, std::abs(traj.series("mixedness_numeric")[i] +
                                        traj.series("coherence_numeric")[i] -
                                        sum0));
                worst_var = std::max(
                    worst_var,
                    std::abs(traj.series("variance_numeric")[i] - var0));
            }
        }
        note(out, std::to_string(trials) +
                      " random commuting-generator configurations");
        ok &= report(out, "commuting case closed vs numeric", worst_closed,
                     1e-10);
        ok &= report(out, "mixedness + coherence drift", worst_sum, 1e-12);
        ok &= report(out, "variance drift", worst_var, 1e-10);
    }

    {  // case 2: non-commuting generator, reduced state matrixwise
        const auto grid = linspace(5.0, 17);
        const auto sigma = ComplexMatrix::diagonal({1.0, -1.0});
        double worst = 0.0;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            const cplx r = random_cplx(rng);
            const cplx s = random_cplx(rng);
            const double eps = 0.3 + 1.2 * in(rng);
            const ProductInteraction h(sigma, case2_generator(), eps);
            const JointEvolver ev(qubit_pair_pure(r, s), h);
            for (double t : grid) {
                const auto numeric =
                    partial_trace(ev.state_at(t), 2, 2, Factor::slow);
                worst = std::max(
                    worst, max_abs_diff(
                               numeric, case2_reduced_state(r, s, eps, t).mat()));
            }
        }
        ok &= report(out, "non-commuting case closed state vs numeric", worst,
                     1e-10);
    }

    {  // Fock-superposition environment: two-level variance identity
        const auto grid = linspace(6.3, 40);
        double worst = 0.0;
        FockEnvParams p;
        p.s = {0.4, 0.2};
        worst = std::max(worst, column_gap(fock_env_scenario(p, grid),
                                           "variance", "variance_from_split"));
        FockEnvParams q;
        q.r = {0.3, -0.8};
        q.p = 0.6;
        q.s = 1.0;
        worst = std::max(worst, column_gap(fock_env_scenario(q, grid),
                                           "variance", "variance_from_split"));
        ok &= report(out, "two-level variance decomposition residual", worst,
                     1e-10);
    }

    {  // light-matter model: convergence, closed forms, transient fit
        const auto grid = linspace(1.5, 25);
        const UdwParams p;
        const auto run = udw_numeric(p, grid);
        note(out, "light-matter truncation converged at dim " +
                      std::to_string(run.fock_dim) + ", deviation " +
                      std::to_string(run.max_deviation));
        ok &= report(out, "light-matter truncation deviation",
                     run.max_deviation, tol::truncation);

        double worst_qubit = 0.0;
        double worst_field = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            worst_qubit = std::max(
                worst_qubit,
                std::abs(run.traj.series("f2_A")[i] -
                         udw_qubit_fragility_exact(p, run.traj.times[i])));
            worst_field = std::max(
                worst_field,
                std::abs(run.traj.series("f2")[i] -
                         udw_field_fragility_model(p.delta, run.traj.times[i],
                                                   udw_field_coeff_verified)));
        }
        ok &= report(out, "qubit fragility vs closed form", worst_qubit, 1e-8);
        ok &= report(out, "field fragility vs coefficient-8 transient",
                     worst_field, 1e-6);

        const double fit =
            udw_field_coeff_fit(run.traj.times, run.traj.series("f2"), p.delta);
        char line[200];
        std::snprintf(line, sizeof(line),
                      "[warn] transient t^2 coefficient: fitted %.6f, "
                      "circulated value %.6f disagrees with the converged "
                      "numerics; the fitted curve is the reference\n",
                      fit, udw_field_coeff_stated);
        out << line;
        ok &= report(out, "fitted transient coefficient vs 8",
                     std::abs(fit - udw_field_coeff_verified), 1e-5);

        // Per-delta field curves stay inside the convergence bound.
        double worst_excess = 0.0;
        const std::vector<std::string> field_only{"f2"};
        for (double delta : {0.1, 0.3, 0.5}) {
            UdwParams q;
            q.alpha = 0.25;
            q.delta = delta;
            const auto r = udw_numeric(q, grid, field_only);
            const double bound = std::max(r.max_deviation, tol::truncation);
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double diff =
                    std::abs(r.traj.series("f2")[i] -
                             udw_field_fragility_model(
                                 delta, r.traj.times[i],
                                 udw_field_coeff_verified));
                worst_excess = std::max(worst_excess, diff - bound);
            }
        }
        ok &= report(out,
                     "field curve vs reference model beyond convergence bound",
                     worst_excess, 0.0);
    }

    {  // thermal field
        const auto sweep = thermal_sweep(1.0, 1.0, 0.5, 10.0, 25, 128);
        ok &= report(out, "thermal fragility closed vs numeric",
                     column_gap(sweep, "f2_exact", "f2_numeric"), 1e-8);
        ok &= report(out, "thermal saturation at beta*omega = 50",
                     std::abs(thermal_fragility_numeric(50.0, 1.0, 1.0, 32) -
                              1.0),
                     1e-10);
        const double small = thermal_fragility_exact(1e-3, 1.0, 1.0);
        ok &= report(out, "thermal small-beta*omega quadratic law (relative)",
                     std::abs(small - 1e-6 / 4.0) / (1e-6 / 4.0), 1e-5);
    }

    {  // normal ordering and the vacuum overlap
        const std::size_t dim = 16;
        const auto x = ops::quadrature(dim);
        ComplexMatrix power = ComplexMatrix::identity(dim);
        double worst_block = 0.0;
        for (int n = 1; n <= 8; ++n) {
            power = power * x;
            if (n < 2) continue;
            ComplexMatrix rebuilt(dim);
            for (const auto& [k, c] : normal_order_expand(n))
                rebuilt += static_cast<double>(c) * omega_operator(dim, k);
            const std::size_t safe = dim - static_cast<std::size_t>(n);
            for (std::size_t i = 0; i < safe; ++i)
                for (std::size_t j = 0; j < safe; ++j)
                    worst_block = std::max(worst_block,
                                           std::abs(rebuilt(i, j) - power(i, j)));
        }
        ok &= report(out, "normal ordering vs quadrature powers, n <= 8",
                     worst_block, 1e-10);

        const auto quartic = normal_order_expand(4);
        const bool moment_ok = quartic.back() == std::pair<int, long long>{0, 3};
        out << (moment_ok ? "[ok]" : "[FAIL]")
            << " vacuum fourth moment of (a + a^dagger) equals 3\n";
        ok &= moment_ok;

        double worst_series = 0.0;
        for (double theta = 0.25; theta <= 2.0; theta += 0.25)
            worst_series = std::max(
                worst_series, std::abs(expansion_vacuum_overlap(theta, 80) -
                                       cplx(std::exp(-theta * theta / 2.0))));
        ok &= report(out, "vacuum overlap series vs Gaussian, theta <= 2",
                     worst_series, 1e-12);

        const HermitianObservable quad(ops::quadrature(64));
        const double theta = 1.3;
        const auto u = matrix_fn(quad.eig(), [theta](double v) {
            return std::exp(cplx(0.0, theta * v));
        });
        ok &= report(out, "vacuum overlap series vs matrix exponential",
                     std::abs(expansion_vacuum_overlap(theta, 80) - u(0, 0)),
                     1e-10);
    }

    return ok;
}

}  // namespace onset::cli
