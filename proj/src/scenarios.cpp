// scenarios.cpp - closed-form reference curves and their numeric twins.
#include "onset/scenarios.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "onset/ops.hpp"

namespace onset {

namespace {

// A = sigma_x written in its own eigenbasis; every scenario here works in
// that basis so the coupling factor is diagonal.
ComplexMatrix ancilla_sigma() { return ComplexMatrix::diagonal({1.0, -1.0}); }

// Unit-gap system observable diag(1/2, -1/2).
ComplexMatrix unit_gap_b() { return ComplexMatrix::diagonal({0.5, -0.5}); }

void append_column(Trajectory& traj, std::string name,
                   std::vector<double> values) {
    if (values.size() != traj.times.size())
        throw std::invalid_argument("append_column: length mismatch");
    traj.names.push_back(std::move(name));
    traj.columns.push_back(std::move(values));
}

}  // namespace

// ---------------- case 1 ----------------

double case1_mixedness(const Case1Params& p, double t) {
    const double r2 = std::norm(p.r);
    const double s2 = std::norm(p.s);
    const double nr = 1.0 + r2;
    const double ns = 1.0 + s2;
    const double sn = std::sin(p.eps * t * p.b_gap);
    return 8.0 * r2 * s2 * sn * sn / (nr * nr * ns * ns);
}

double case1_coherence(const Case1Params& p, double t) {
    const double r2 = std::norm(p.r);
    const double s2 = std::norm(p.s);
    const double nr = 1.0 + r2;
    const double ns = 1.0 + s2;
    const double sn = std::sin(p.eps * t * p.b_gap);
    return 2.0 * s2 * (nr * nr - 4.0 * r2 * sn * sn) / (nr * nr * ns * ns);
}

double case1_conserved_sum(const Case1Params& p) {
    const double s2 = std::norm(p.s);
    const double ns = 1.0 + s2;
    return 2.0 * s2 / (ns * ns);
}

double case1_variance(const Case1Params& p) {
    return 0.5 * p.b_gap * p.b_gap * case1_conserved_sum(p);
}

Trajectory case1_scenario(const Case1Params& p, std::span<const double> grid) {
    const ProductInteraction h(
        ancilla_sigma(),
        ComplexMatrix::diagonal({0.5 * p.b_gap, -0.5 * p.b_gap}), p.eps);
    const cplx amps_a[2] = {1.0, p.r};
    const cplx amps_b[2] = {1.0, p.s};
    const std::string channels[] = {"mixedness", "coherence", "variance"};
    Trajectory traj = sample_trajectory(pure_state(amps_a), pure_state(amps_b),
                                        h, grid, channels);
    for (auto& name : traj.names) name += "_numeric";
    std::vector<double> mu(grid.size()), co(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        mu[i] = case1_mixedness(p, grid[i]);
        co[i] = case1_coherence(p, grid[i]);
    }
    append_column(traj, "mixedness_closed", std::move(mu));
    append_column(traj, "coherence_closed", std::move(co));
    append_column(traj, "variance_closed",
                  std::vector<double>(grid.size(), case1_variance(p)));
    return traj;
}

// ---------------- case 2 ----------------

ComplexMatrix case2_generator() {
    ComplexMatrix m(2);
    m(0, 1) = cplx(0.0, -1.0);
    m(1, 0) = cplx(0.0, 1.0);
    return m;
}

DensityMatrix case2_reduced_state(cplx r, cplx s, double eps, double t) {
    const double nr = 1.0 + std::norm(r);
    const double ns = 1.0 + std::norm(s);
    const double root = std::sqrt(nr * ns);
    const double c = std::cos(eps * t);
    const double sn = std::sin(eps * t);
    const cplx chi_p = (c + s * sn) / root;
    const cplx chi_m = (c - s * sn) / root;
    const cplx xi_p = (s * c + sn) / root;
    const cplx xi_m = (s * c - sn) / root;
    const double r2 = std::norm(r);
    ComplexMatrix rho(2);
    rho(0, 0) = std::norm(chi_p) + r2 * std::norm(chi_m);
    rho(0, 1) = chi_p * std::conj(xi_m) + r2 * chi_m * std::conj(xi_p);
    rho(1, 0) = std::conj(rho(0, 1));
    rho(1, 1) = std::norm(xi_m) + r2 * std::norm(xi_p);
    return DensityMatrix::validated(std::move(rho));
}

Trajectory case2_scenario(const Case2Params& p, std::span<const double> grid) {
    const ProductInteraction h(ancilla_sigma(), case2_generator(), p.eps);
    const HermitianObservable b_ref(unit_gap_b());
    const cplx amps_a[2] = {1.0, p.r};
    const cplx amps_b[2] = {1.0, p.s};
    const std::string channels[] = {"mixedness", "coherence", "variance"};
    Trajectory traj = sample_trajectory(pure_state(amps_a), pure_state(amps_b),
                                        h, grid, channels, nullptr, &b_ref);
    for (auto& name : traj.names) name += "_numeric";
    std::vector<double> mu(grid.size()), co(grid.size()), va(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const DensityMatrix rho = case2_reduced_state(p.r, p.s, p.eps, grid[i]);
        mu[i] = mixedness(rho);
        co[i] = coherence_2norm(rho, b_ref);
        va[i] = variance(rho, b_ref);
    }
    append_column(traj, "mixedness_closed", std::move(mu));
    append_column(traj, "coherence_closed", std::move(co));
    append_column(traj, "variance_closed", std::move(va));
    return traj;
}

// ---------------- Fock-superposition environment ----------------

Trajectory fock_env_scenario(const FockEnvParams& p,
                             std::span<const double> grid) {
    if (p.fock_dim < 4)
        throw std::invalid_argument("fock_env_scenario: fock_dim must be >= 4");
    const FockSpace fs(p.fock_dim, 1.0);
    const std::pair<std::size_t, cplx> levels[] = {
        {1, 1.0}, {2, p.r}, {3, p.p}};
    const DensityMatrix env = fock_superposition(fs, levels);
    const cplx amps_b[2] = {1.0, p.s};
    const ProductInteraction h(ops::number(p.fock_dim), case2_generator(),
                               p.eps);
    const HermitianObservable b_ref(unit_gap_b());
    const std::string channels[] = {"purity", "mixedness", "coherence",
                                    "variance"};
    Trajectory traj = sample_trajectory(env, pure_state(amps_b), h, grid,
                                        channels, nullptr, &b_ref);
    const auto& mu = traj.series("mixedness");
    const auto& co = traj.series("coherence");
    std::vector<double> split(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        split[i] = 0.5 * (mu[i] + co[i]);  // unit gap
    append_column(traj, "variance_from_split", std::move(split));
    return traj;
}

// ---------------- single-mode light-matter model ----------------

double udw_qubit_fragility_exact(const UdwParams& p, double t) {
    const double x = p.nu * t;
    return 4.0 * std::norm(p.alpha) * std::exp(-4.0 * x * x);
}

double udw_field_fragility_model(double delta, double t, double coeff) {
    if (!(delta >= 0.0 && delta <= 1.0))
        throw std::invalid_argument("udw_field_fragility_model: delta outside [0, 1]");
    const double q = 1.0 - delta;
    return delta * delta + q * q +
           2.0 * delta * q * (1.0 - coeff * t * t) * std::exp(-4.0 * t * t);
}

double udw_field_fragility_exact(double delta, double t) {
    return udw_field_fragility_model(delta, t, udw_field_coeff_stated);
}

double udw_field_coeff_fit(std::span<const double> times,
                           std::span<const double> f2_field, double delta) {
    if (times.size() != f2_field.size())
        throw std::invalid_argument("udw_field_coeff_fit: length mismatch");
    const double q = 1.0 - delta;
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t2 = times[i] * times[i];
        const double damp = std::exp(-4.0 * t2);
        const double base = delta * delta + q * q + 2.0 * delta * q * damp;
        const double slope = 2.0 * delta * q * t2 * damp;
        num += slope * (base - f2_field[i]);
        den += slope * slope;
    }
    if (den == 0.0)
        throw std::invalid_argument(
            "udw_field_coeff_fit: no transient weight (delta in {0,1} or all t = 0)");
    return num / den;
}

TruncationError::TruncationError(
    std::string what, std::vector<std::pair<std::size_t, double>> history)
    : std::runtime_error(std::move(what)), history_(std::move(history)) {}

UdwRun udw_numeric(const UdwParams& p, std::span<const double> grid) {
    const std::string channels[] = {"f2_A",     "f2",         "purity_A",
                                    "purity_B", "variance_A", "variance"};
    return udw_numeric(p, grid, channels);
}

UdwRun udw_numeric(const UdwParams& p, std::span<const double> grid,
                   std::span<const std::string> which, double tolerance,
                   std::size_t max_dim) {
    if (p.fock_dim < 8)
        throw std::invalid_argument("udw_numeric: fock_dim must be >= 8");
    if (tolerance <= 0.0)
        throw std::invalid_argument("udw_numeric: tolerance must be positive");
    const DensityMatrix rho_q = qubit_atom(p.alpha, p.delta);

    const auto run = [&](std::size_t dim) {
        const FockSpace fs(dim, 1.0, p.nu);
        const ProductInteraction h(ancilla_sigma(),
                                   ops::quadrature(dim) * cplx(p.nu), 1.0);
        return sample_trajectory(rho_q, vacuum(fs), h, grid, which);
    };

    std::size_t dim = p.fock_dim;
    Trajectory prev = run(dim);
    std::vector<std::pair<std::size_t, double>> history;
    while (true) {
        const std::size_t next = 2 * dim;
        if (next > max_dim) {
            std::string msg = "udw_numeric: truncation not converged by dim " +
                              std::to_string(dim) + "; deviations:";
            for (const auto& [d, dev] : history)
                msg += " dim " + std::to_string(d) + " -> " +
                       std::to_string(dev) + ";";
            throw TruncationError(std::move(msg), std::move(history));
        }
        Trajectory cur = run(next);
        double dev = 0.0;
        for (std::size_t c = 0; c < cur.columns.size(); ++c)
            for (std::size_t i = 0; i < cur.times.size(); ++i)
                dev = std::max(dev,
                               std::abs(cur.columns[c][i] - prev.columns[c][i]));
        history.emplace_back(next, dev);
        if (dev < tolerance) return UdwRun{std::move(cur), next, dev};
        dim = next;
        prev = std::move(cur);
    }
}

// ---------------- thermal field ----------------

double thermal_fragility_exact(double beta, double omega, double nu) {
    const double bw = beta * omega;
    if (!(bw > 0.0))
        throw std::invalid_argument("thermal_fragility_exact: beta*omega must be > 0");
    const double th = std::tanh(0.5 * bw);
    return nu * nu * th * th;
}

double thermal_fragility_numeric(double beta, double omega, double nu,
                                 std::size_t fock_dim) {
    const FockSpace fs(fock_dim, omega, nu);
    const HermitianObservable b(ops::quadrature(fock_dim) * cplx(nu));
    return fragility_2(thermal_state(fs, beta), b);
}

Trajectory thermal_sweep(double omega, double nu, double bw_min, double bw_max,
                         std::size_t points, std::size_t fock_dim) {
    if (!(bw_min > 0.0) || !(bw_max > bw_min))
        throw std::invalid_argument("thermal_sweep: need 0 < bw_min < bw_max");
    if (points < 2) throw std::invalid_argument("thermal_sweep: need >= 2 points");
    Trajectory traj;
    traj.times.resize(points);
    std::vector<double> exact(points), numeric(points);
    const double step = (bw_max - bw_min) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double bw = bw_min + static_cast<double>(i) * step;
        traj.times[i] = bw;
        exact[i] = thermal_fragility_exact(bw / omega, omega, nu);
        numeric[i] = thermal_fragility_numeric(bw / omega, omega, nu, fock_dim);
    }
    traj.names = {"f2_exact", "f2_numeric"};
    traj.columns = {std::move(exact), std::move(numeric)};
    return traj;
}

// ---------------- normal ordering ----------------

namespace {

unsigned __int128 binomial_128(int n, int k) {
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= static_cast<unsigned>(n - k + i);
        acc /= static_cast<unsigned>(i);
    }
    return acc;
}

}  // namespace

std::vector<std::pair<int, long long>> normal_order_expand(int n) {
    if (n < 2) throw std::invalid_argument("normal_order_expand: n must be >= 2");
    if (n > 32)
        throw std::invalid_argument(
            "normal_order_expand: coefficients overflow 64 bits past n = 32");
    std::vector<std::pair<int, long long>> out;
    unsigned __int128 dfact = 1;  // (2i-1)!!
    for (int i = 0; 2 * i <= n; ++i) {
        if (i > 0) dfact *= static_cast<unsigned>(2 * i - 1);
        const unsigned __int128 coeff = dfact * binomial_128(n, 2 * i);
        if (coeff > static_cast<unsigned __int128>(
                        std::numeric_limits<long long>::max()))
            throw std::overflow_error("normal_order_expand: coefficient overflow");
        out.emplace_back(n - 2 * i, static_cast<long long>(coeff));
    }
    return out;
}

ComplexMatrix omega_operator(std::size_t fock_dim, int k) {
    if (k < 0) throw std::invalid_argument("omega_operator: k must be >= 0");
    if (k == 0) return ComplexMatrix::identity(fock_dim);
    std::vector<ComplexMatrix> a_pow(k + 1), ad_pow(k + 1);
    a_pow[0] = ComplexMatrix::identity(fock_dim);
    ad_pow[0] = ComplexMatrix::identity(fock_dim);
    const ComplexMatrix a = ops::annihilation(fock_dim);
    const ComplexMatrix ad = ops::creation(fock_dim);
    for (int i = 1; i <= k; ++i) {
        a_pow[i] = a_pow[i - 1] * a;
        ad_pow[i] = ad_pow[i - 1] * ad;
    }
    ComplexMatrix out(fock_dim);
    for (int i = 0; i <= k; ++i) {
        const double c = static_cast<double>(binomial_128(k, i));
        out += c * (ad_pow[k - i] * a_pow[i]);
    }
    return out;
}

cplx expansion_vacuum_overlap(double theta, int max_n) {
    if (max_n < 0)
        throw std::invalid_argument("expansion_vacuum_overlap: max_n must be >= 0");
    const cplx itheta(0.0, theta);
    cplx term = 1.0;  // n = 0
    cplx acc = term;
    for (int n = 2; n <= max_n; n += 2) {
        term *= itheta * itheta / static_cast<double>(n);
        acc += term;
    }
    return acc;
}

}  // namespace onset
