// acceptance.cpp - one self-checking run per headline claim. Each criterion
// prints a single [PASS]/[FAIL]/[WARN] line with its worst residual and the
// tolerance it was held to; the exit code is the number of hard failures.
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "onset/diagnostics.hpp"
#include "onset/dynamics.hpp"
#include "onset/fragility.hpp"
#include "onset/matrix.hpp"
#include "onset/ops.hpp"
#include "onset/scenarios.hpp"
#include "onset/states.hpp"
#include "onset/tolerances.hpp"

using namespace onset;

namespace {

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof(buf), pattern, args);
    va_end(args);
    return buf;
}

enum class Verdict { pass, warn, fail };

struct Result {
    Verdict verdict;
    std::string text;
};

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

double worst_unipartite = 0.0;  // gathered during criterion 1, reported at 12

// ---------------- criteria ----------------

Result onset_identity() {
    std::mt19937_64 rng(424242);
    double worst_dot = 0.0;
    double worst_curv = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t da = 2 + rng() % 5;
        const std::size_t db = 2 + rng() % 5;
        const auto rho_a = random_density(da, rng());
        const auto rho_b = random_density(db, rng());
        const ProductInteraction h(random_hermitian(da, rng()),
                                   random_hermitian(db, rng()), 1.0);
        for (int n = 2; n <= 4; ++n) {
            const auto rep = onset_identities(rho_a, rho_b, h, n);
            worst_dot = std::max(worst_dot, std::abs(rep.gamma_dot0));
            worst_curv = std::max(worst_curv, rep.curvature_rel_error);
            worst_unipartite =
                std::max(worst_unipartite, std::abs(rep.unipartite_ddot));
        }
    }
    const bool ok = worst_curv < 1e-4 && worst_dot < 1e-8;
    return {ok ? Verdict::pass : Verdict::fail,
            fmt("onset identity, 200 random configs, n in {2,3,4}: curvature "
                "vs -4 var(A) f_n worst rel %.3e (tol 1e-4); first derivative "
                "worst %.3e (tol 1e-8)",
                worst_curv, worst_dot)};
}

Result pure_system() {
    std::mt19937_64 rng(515151);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t da = 2 + rng() % 5;
        const std::size_t db = 2 + rng() % 5;
        const auto rho_a = random_density(da, rng());
        const auto rho_b = random_pure(db, rng);
        const ProductInteraction h(random_hermitian(da, rng()),
                                   random_hermitian(db, rng()), 1.0);
        const auto rep = onset_identities(rho_a, rho_b, h, 2);
        if (!rep.system_pure)
            return {Verdict::fail, "pure system factor not recognized"};
        worst = std::max(worst, rep.pure_rel_error);
    }
    return {worst < 1e-6 ? Verdict::pass : Verdict::fail,
            fmt("pure-system curvature vs -4 var(A) var(B), 100 configs: "
                "worst rel %.3e (tol 1e-6)",
                worst)};
}

Result entropy_onset() {
    std::mt19937_64 rng(616161);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t da = 2 + rng() % 5;
        const std::size_t db = 2 + rng() % 5;
        const auto rho_a = random_density(da, rng());
        const auto rho_b = floored(random_density(db, rng()), 0.3);
        const ProductInteraction h(random_hermitian(da, rng()),
                                   random_hermitian(db, rng()), 1.0);
        const auto rep = onset_identities(rho_a, rho_b, h, 2);
        if (!rep.entropy_checked)
            return {Verdict::fail, "entropy curvature skipped unexpectedly"};
        worst = std::max(worst, rep.entropy_rel_error);
    }
    return {worst < 1e-4 ? Verdict::pass : Verdict::fail,
            fmt("entropy curvature vs 2 var(A) f_1 on strictly positive "
                "states, 100 configs: worst rel %.3e (tol 1e-4)",
                worst)};
}

Result variance_bound() {
    std::mt19937_64 rng(727272);
    double worst_excess = -1.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t dim = 2 + rng() % 7;
        const auto rho = random_density(dim, rng());
        const HermitianObservable b(random_hermitian(dim, rng()));
        worst_excess =
            std::max(worst_excess, fragility_2(rho, b) - variance(rho, b));
    }
    double worst_pure = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 2 + rng() % 7;
        const auto rho = random_pure(dim, rng);
        const HermitianObservable b(random_hermitian(dim, rng()));
        worst_pure = std::max(
            worst_pure, std::abs(variance(rho, b) - fragility_2(rho, b)));
    }
    const bool ok = worst_excess <= 1e-10 && worst_pure < 1e-8;
    return {ok ? Verdict::pass : Verdict::fail,
            fmt("variance bound, 10000 random states dims 2-8: max(f_2 - "
                "variance) %.3e (tol 1e-10); pure-state equality worst %.3e "
                "over 1000 states (tol 1e-8)",
                worst_excess, worst_pure)};
}

Result case1_closed_forms() {
    std::mt19937_64 rng(838383);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> in(0.0, 1.0);
    const auto grid = linspace(3.0, 50);
    double worst_closed = 0.0;
    double worst_sum = 0.0;
    double worst_var = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        Case1Params p;
        p.r = {gauss(rng), gauss(rng)};
        p.s = {gauss(rng), gauss(rng)};
        p.eps = 0.3 + 1.2 * in(rng);
        p.b_gap = 0.5 + 1.5 * in(rng);
        const auto traj = case1_scenario(p, grid);
        for (const char* base : {"mixedness", "coherence", "variance"}) {
            const auto& numeric =
                traj.series(std::string(base) + "_numeric");
            const auto& closed = traj.series(std::string(base) + "_closed");
            for (std::size_t i = 0; i < grid.size(); ++i)
                worst_closed =
                    std::max(worst_closed, std::abs(numeric[i] - closed[i]));
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
    const bool ok =
        worst_closed < 1e-10 && worst_sum < 1e-12 && worst_var < 1e-10;
    return {ok ? Verdict::pass : Verdict::fail,
            fmt("commuting-case closed forms, 100 random configs on 50-point "
                "grids: pointwise worst %.3e (tol 1e-10); mixedness+coherence "
                "drift %.3e (tol 1e-12); variance drift %.3e (tol 1e-10)",
                worst_closed, worst_sum, worst_var)};
}

Result case2_and_two_level_identity() {
    std::mt19937_64 rng(949494);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> in(0.0, 1.0);
    const auto grid = linspace(5.0, 17);
    const auto sigma = ComplexMatrix::diagonal({1.0, -1.0});
    double worst_state = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const cplx r{gauss(rng), gauss(rng)};
        const cplx s{gauss(rng), gauss(rng)};
        const double eps = 0.3 + 1.2 * in(rng);
        const ProductInteraction h(sigma, case2_generator(), eps);
        const JointEvolver ev(qubit_pair_pure(r, s), h);
        for (double t : grid) {
            const auto numeric =
                partial_trace(ev.state_at(t), 2, 2, Factor::slow);
            worst_state = std::max(
                worst_state,
                max_abs_diff(numeric,
                             case2_reduced_state(r, s, eps, t).mat()));
        }
    }
    double worst_split = 0.0;
    for (int combo = 0; combo < 2; ++combo) {
        FockEnvParams p;
        p.s = combo ? cplx{0.4, 0.2} : cplx{1.0, 0.0};
        p.r = combo ? cplx{0.3, -0.8} : cplx{0.5, 0.0};
        p.p = combo ? cplx{0.6, 0.0} : cplx{0.0, 0.2};
        const auto traj = fock_env_scenario(p, linspace(6.3, 40));
        const auto& var = traj.series("variance");
        const auto& split = traj.series("variance_from_split");
        for (std::size_t i = 0; i < var.size(); ++i)
            worst_split =
                std::max(worst_split, std::abs(var[i] - split[i]));
    }
    const bool ok = worst_state < 1e-10 && worst_split < 1e-10;
    return {ok ? Verdict::pass : Verdict::fail,
            fmt("non-commuting-case reduced state vs numeric, 100 random "
                "configs: worst %.3e (tol 1e-10); two-level variance "
                "decomposition residual %.3e (tol 1e-10)",
                worst_state, worst_split)};
}

Result field_fragility() {
    double worst_f0 = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double delta = std::min(i * 0.05, 1.0);
        worst_f0 = std::max(
            worst_f0, std::abs(udw_field_fragility_exact(delta, 0.0) - 1.0));
    }
    if (worst_f0 > 1e-15)
        return {Verdict::fail,
                fmt("field fragility at t=0 deviates from 1 by %.3e", worst_f0)};

    const auto grid = linspace(1.5, 25);
    const std::vector<std::string> field_only{"f2"};
    double worst_stated = 0.0;
    double fit_sum = 0.0;
    int fits = 0;
    for (double delta : {0.1, 0.3, 0.5}) {
        UdwParams p;
        p.alpha = 0.25;
        p.delta = delta;
        const auto run = udw_numeric(p, grid, field_only);
        const auto& field = run.traj.series("f2");
        for (std::size_t i = 0; i < grid.size(); ++i)
            worst_stated = std::max(
                worst_stated,
                std::abs(field[i] -
                         udw_field_fragility_exact(delta, grid[i])));
        fit_sum += udw_field_coeff_fit(run.traj.times, field, delta);
        ++fits;
    }
    const double fit = fit_sum / fits;
    if (worst_stated <= 1e-6)
        return {Verdict::pass,
                fmt("field fragility closed form, delta in {0.1,0.3,0.5}: "
                    "worst vs numeric %.3e (tol 1e-6); f(0)=1 within %.1e",
                    worst_stated, worst_f0)};
    return {Verdict::warn,
            fmt("field fragility transient: the circulated coefficient "
                "6+sqrt(2)=%.6f misses the converged numerics by %.3e (target "
                "1e-6); fitted coefficient %.6f; f(0)=1 holds within %.1e; "
                "the numeric curve is kept as ground truth",
                udw_field_coeff_stated, worst_stated, fit, worst_f0)};
}

Result qubit_fragility() {
    const auto grid = linspace(1.5, 25);
    const std::vector<std::string> chan{"f2_A"};
    const UdwParams p;
    const auto run = udw_numeric(p, grid, chan);

    const std::size_t dim = 64;
    const HermitianObservable quad(ops::quadrature(dim));
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double theta = 2.0 * grid[i] * p.nu;
        const auto u = matrix_fn(quad.eig(), [theta](double x) {
            return std::exp(cplx(0.0, theta * x));
        });
        const double closed = 4.0 * std::norm(p.alpha) * std::norm(u(0, 0));
        worst = std::max(worst,
                         std::abs(run.traj.series("f2_A")[i] - closed));
    }

    double worst_series = 0.0;
    for (double theta = 0.2; theta <= 2.0 + 1e-12; theta += 0.2)
        worst_series = std::max(
            worst_series, std::abs(expansion_vacuum_overlap(theta, 80) -
                                   cplx(std::exp(-theta * theta / 2.0))));

    const bool ok = worst < 1e-8 && worst_series < 1e-12;
    return {ok ? Verdict::pass : Verdict::fail,
            fmt("qubit fragility vs 4|alpha|^2 |<0|exp(2 i t nu (a+a^dag))|0>"
                "|^2: worst %.3e (tol 1e-8); overlap series vs Gaussian "
                "worst %.3e (tol 1e-12, theta <= 2)",
                worst, worst_series)};
}

Result thermal_closed_form() {
    double worst_rel = 0.0;
    for (int i = 0; i < 25; ++i) {
        const double bw = 0.5 + (10.0 - 0.5) * i / 24.0;
        const double exact = thermal_fragility_exact(bw, 1.0, 1.0);
        const double numeric = thermal_fragility_numeric(bw, 1.0, 1.0, 128);
        worst_rel = std::max(worst_rel, std::abs(numeric - exact) / exact);
    }
    const double saturation =
        std::abs(thermal_fragility_numeric(50.0, 1.0, 1.0, 64) - 1.0);
    const double small = thermal_fragility_exact(1e-3, 1.0, 1.0);
    const bool ok = worst_rel < 1e-8 && saturation < 1e-10 && small < 1e-6;
    return {ok ? Verdict::pass : Verdict::fail,
            fmt("thermal fragility dim-128 vs closed form, beta*omega in "
                "[0.5,10]: worst rel %.3e (tol 1e-8); saturation at 50: %.3e "
                "(tol 1e-10); value at 1e-3: %.3e (tol 1e-6)",
                worst_rel, saturation, small)};
}

Result witness() {
    const HermitianObservable b(ComplexMatrix::diagonal({0.0, 1.0, 3.0}));
    ComplexMatrix m(3);
    m(0, 0) = 0.4;
    m(1, 1) = 0.3;
    m(2, 2) = 0.3;
    m(1, 2) = 0.1;
    m(2, 1) = 0.1;
    const auto rho = DensityMatrix::validated(m);
    ComplexMatrix permuted(3);
    permuted(1, 1) = 0.4;
    permuted(0, 0) = 0.3;
    permuted(2, 2) = 0.3;
    permuted(0, 2) = 0.1;
    permuted(2, 0) = 0.1;
    const auto swapped = DensityMatrix::validated(permuted);

    const double before = fragility_2(rho, b);
    const double after = fragility_2(swapped, b);
    const double coh_shift =
        std::abs(coherence_2norm(rho, b) - coherence_2norm(swapped, b));
    const bool ok = std::abs(before - 0.04) < 1e-12 &&
                    std::abs(after - 0.09) < 1e-12 && coh_shift < 1e-12;
    return {ok ? Verdict::pass : Verdict::fail,
            fmt("incoherent relabeling raises f_2: %.6f -> %.6f (expected "
                "0.04 -> 0.09, tol 1e-12); coherence shift %.3e (tol 1e-12)",
                before, after, coh_shift)};
}

Result normal_ordering() {
    // Symbolic oracle over integer combinations of a^dag^p a^q, built by
    // right-multiplying with (a + a^dag) and rewriting a^q a^dag as
    // a^dag a^q + q a^(q-1).
    using Poly = std::map<std::pair<int, int>, long long>;
    const auto mul_quadrature = [](const Poly& in) {
        Poly out;
        for (const auto& [mono, c] : in) {
            const auto [p, q] = mono;
            out[{p, q + 1}] += c;
            out[{p + 1, q}] += c;
            if (q) out[{p, q - 1}] += c * q;
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    };
    const auto binom = [](int n, int k) {
        long long v = 1;
        for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
        return v;
    };

    Poly power{{{0, 0}, 1}};
    long long vacuum_quartic = -1;
    for (int n = 1; n <= 8; ++n) {
        power = mul_quadrature(power);
        if (n < 2) continue;
        Poly expected;
        for (const auto& [k, c] : normal_order_expand(n))
            for (int i = 0; i <= k; ++i)
                expected[{k - i, i}] += c * binom(k, i);
        if (expected != power)
            return {Verdict::fail,
                    fmt("normal ordering diverges from the symbolic "
                        "expansion at n=%d",
                        n)};
        if (n == 4) vacuum_quartic = power.at({0, 0});
    }
    const bool ok = vacuum_quartic == 3;
    return {ok ? Verdict::pass : Verdict::fail,
            fmt("normal ordering matches the symbolic operator expansion "
                "exactly for n <= 8; vacuum fourth moment %lld (expected 3)",
                vacuum_quartic)};
}

Result unipartite_control() {
    return {worst_unipartite < 1e-8 ? Verdict::pass : Verdict::fail,
            fmt("closed-system curvature of tr(rho^n), n in {2,3,4}, over "
                "the 200 onset configs: worst %.3e (tol 1e-8)",
                worst_unipartite)};
}

Result renyi_limit() {
    std::mt19937_64 rng(131313);
    const double eps_list[] = {1e-3, 1e-4, 1e-5};
    double worst_ratio_dev = 0.0;
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 2 + rng() % 7;
        const auto rho = random_density(dim, rng());
        const double vn = von_neumann_entropy(rho);
        double d[3];
        for (int i = 0; i < 3; ++i)
            d[i] = std::abs(renyi_entropy_real(rho, 1.0 + eps_list[i]) - vn);
        if (d[2] < 1e-11) continue;  // flat spectrum, nothing to resolve
        ++checked;
        for (int i = 0; i + 1 < 3; ++i) {
            const double ratio = d[i] / d[i + 1];
            worst_ratio_dev = std::max(worst_ratio_dev, std::abs(ratio - 10.0));
        }
    }
    const bool ok = checked >= 30 && worst_ratio_dev < 1.5;
    return {ok ? Verdict::pass : Verdict::fail,
            fmt("Renyi order 1+eps vs von Neumann, eps in {1e-3,1e-4,1e-5}: "
                "error shrank linearly on %d/50 random states, decade ratio "
                "within %.2f of 10 (tol 1.5)",
                checked, worst_ratio_dev)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Result()>> criteria[] = {
        {"onset identity", onset_identity},
        {"pure-system depurification", pure_system},
        {"entropy onset", entropy_onset},
        {"variance bound", variance_bound},
        {"commuting-case closed forms", case1_closed_forms},
        {"non-commuting case and two-level identity",
         case2_and_two_level_identity},
        {"field fragility closed form", field_fragility},
        {"qubit fragility closed form", qubit_fragility},
        {"thermal closed form", thermal_closed_form},
        {"non-monotonicity witness", witness},
        {"normal ordering", normal_ordering},
        {"unipartite control", unipartite_control},
        {"Renyi-to-von-Neumann limit", renyi_limit},
    };

    int failures = 0;
    int warnings = 0;
    int index = 0;
    for (const auto& [name, body] : criteria) {
        ++index;
        Result r{Verdict::fail, "unknown"};
        try {
            r = body();
        } catch (const std::exception& e) {
            r = {Verdict::fail, fmt("%s: exception: %s", name, e.what())};
        }
        const char* label = r.verdict == Verdict::pass   ? "PASS"
                            : r.verdict == Verdict::warn ? "WARN"
                                                         : "FAIL";
        std::printf("[%s] %2d. %s\n", label, index, r.text.c_str());
        if (r.verdict == Verdict::fail) ++failures;
        if (r.verdict == Verdict::warn) ++warnings;
    }
    std::printf("%d/%d passed, %d soft warnings, %d failures\n",
                static_cast<int>(std::size(criteria)) - failures - warnings,
                static_cast<int>(std::size(criteria)), warnings, failures);
    return failures;
}
