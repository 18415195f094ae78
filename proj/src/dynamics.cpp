// dynamics.cpp - evolution, trajectory sampling, onset identity checks.
#include "onset/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "onset/kernels.hpp"

namespace onset {

ProductInteraction::ProductInteraction(ComplexMatrix a, ComplexMatrix b,
                                       double eps)
    : ancilla(std::move(a)), system(std::move(b)), coupling(eps) {
    if (!std::isfinite(eps))
        throw std::invalid_argument("ProductInteraction: coupling must be finite");
}

JointEvolver::JointEvolver(const DensityMatrix& rho0,
                           const ProductInteraction& h)
    : coupling_(h.coupling) {
    if (rho0.dim() != h.joint_dim())
        throw std::invalid_argument("JointEvolver: state dim != joint dim");
    joint_eig_ = herm_eig(kron(h.ancilla.mat(), h.system.mat()));
    rho0_eb_ = conjugate_by_dagger(joint_eig_.eigenvectors, rho0.mat());
}

ComplexMatrix JointEvolver::state_at(double t) const {
    const std::size_t n = rho0_eb_.dim();
    ComplexMatrix twisted(n);
    kernels::phase_conjugate(rho0_eb_.data(), joint_eig_.eigenvalues.data(),
                             coupling_ * t, twisted.data(), n);
    return conjugate_by(joint_eig_.eigenvectors, twisted);
}

DensityMatrix evolve(const DensityMatrix& rho0, const ProductInteraction& h,
                     double t) {
    return DensityMatrix::trusted(JointEvolver(rho0, h).state_at(t));
}

std::vector<double> linspace(double t_max, std::size_t points) {
    if (points < 2) throw std::invalid_argument("linspace: need >= 2 points");
    if (!std::isfinite(t_max) || t_max <= 0.0)
        throw std::invalid_argument("linspace: t_max must be positive");
    std::vector<double> grid(points);
    const double step = t_max / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = static_cast<double>(i) * step;
    grid.back() = t_max;
    return grid;
}

const std::vector<double>& Trajectory::series(std::string_view name) const {
    for (std::size_t c = 0; c < names.size(); ++c)
        if (names[c] == name) return columns[c];
    throw std::invalid_argument("Trajectory: no series named '" +
                                std::string(name) + "'");
}

bool Trajectory::has(std::string_view name) const {
    return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

enum class Side { ancilla, system };
enum class Kind { purity, mixedness, coherence, variance, fragility, renyi, vn };

struct Channel {
    Side side = Side::system;
    Kind kind = Kind::purity;
    int order = 2;
};

std::optional<int> parse_order(std::string_view digits) {
    if (digits.empty()) return std::nullopt;
    int value = 0;
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        value = value * 10 + (ch - '0');
        if (value > 64) return std::nullopt;
    }
    return value;
}

Channel parse_channel(const std::string& token) {
    Channel ch;
    std::string_view base = token;
    if (base.ends_with("_A")) {
        ch.side = Side::ancilla;
        base.remove_suffix(2);
    } else if (base.ends_with("_B")) {
        base.remove_suffix(2);
    }
    if (base == "purity") {
        ch.kind = Kind::purity;
    } else if (base == "mixedness") {
        ch.kind = Kind::mixedness;
    } else if (base == "coherence") {
        ch.kind = Kind::coherence;
    } else if (base == "variance") {
        ch.kind = Kind::variance;
    } else if (base == "vn") {
        ch.kind = Kind::vn;
    } else if (base.starts_with("renyi")) {
        const auto order = parse_order(base.substr(5));
        if (!order || *order < 2)
            throw std::invalid_argument("sample_trajectory: bad channel '" +
                                        token + "' (renyi<n> needs n >= 2)");
        ch.kind = Kind::renyi;
        ch.order = *order;
    } else if (base.starts_with("f")) {
        const auto order = parse_order(base.substr(1));
        if (!order || *order < 1)
            throw std::invalid_argument("sample_trajectory: bad channel '" +
                                        token + "' (f<n> needs n >= 1)");
        ch.kind = Kind::fragility;
        ch.order = *order;
    } else {
        throw std::invalid_argument(
            "sample_trajectory: unknown channel '" + token +
            "'; expected purity_A, purity_B, mixedness, coherence, variance, "
            "f<n>, renyi<n>, or vn, with an optional _A/_B factor suffix");
    }
    return ch;
}

double eval_channel(const Channel& ch, const DensityMatrix& rho,
                    const HermitianObservable& ref) {
    switch (ch.kind) {
        case Kind::purity: return n_purity(rho, 2);
        case Kind::mixedness: return mixedness(rho);
        case Kind::coherence: return coherence_2norm(rho, ref);
        case Kind::variance: return variance(rho, ref);
        case Kind::fragility:
            return ch.order == 1 ? fragility_1(rho, ref)
                                 : fragility_n(rho, ref, ch.order);
        case Kind::renyi: return renyi_entropy(rho, ch.order);
        case Kind::vn: return von_neumann_entropy(rho);
    }
    throw std::logic_error("eval_channel: unhandled kind");
}

}  // namespace

Trajectory sample_trajectory(const DensityMatrix& rho_a,
                             const DensityMatrix& rho_b,
                             const ProductInteraction& h,
                             std::span<const double> grid,
                             std::span<const std::string> channels,
                             const HermitianObservable* ref_a,
                             const HermitianObservable* ref_b) {
    if (rho_a.dim() != h.ancilla.dim() || rho_b.dim() != h.system.dim())
        throw std::invalid_argument("sample_trajectory: factor dims disagree with h");
    if (grid.empty())
        throw std::invalid_argument("sample_trajectory: empty time grid");
    if (channels.empty()) {
        Trajectory bare;
        bare.times.assign(grid.begin(), grid.end());
        return bare;
    }

    std::vector<Channel> parsed;
    parsed.reserve(channels.size());
    bool need_a = false;
    bool need_b = false;
    for (const auto& token : channels) {
        parsed.push_back(parse_channel(token));
        (parsed.back().side == Side::ancilla ? need_a : need_b) = true;
    }

    const HermitianObservable& obs_a = ref_a ? *ref_a : h.ancilla;
    const HermitianObservable& obs_b = ref_b ? *ref_b : h.system;
    if (obs_a.dim() != rho_a.dim() || obs_b.dim() != rho_b.dim())
        throw std::invalid_argument("sample_trajectory: reference observable dim mismatch");

    const std::size_t da = rho_a.dim();
    const std::size_t db = rho_b.dim();
    const DensityMatrix rho0 =
        DensityMatrix::trusted(kron(rho_a.mat(), rho_b.mat()));
    const JointEvolver evolver(rho0, h);

    Trajectory out;
    out.times.assign(grid.begin(), grid.end());
    out.names.assign(channels.begin(), channels.end());
    out.columns.assign(channels.size(),
                       std::vector<double>(grid.size(), 0.0));

    // Exceptions cannot cross the parallel region; remember the first one
    // and rethrow it after the loop.
    std::atomic<bool> failed{false};
    std::string failure;
    bool near_pure = false;
    double near_pure_eigenvalue = 0.0;

#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < static_cast<std::int64_t>(grid.size()); ++p) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            const ComplexMatrix joint = evolver.state_at(grid[p]);
            std::optional<DensityMatrix> at;
            std::optional<DensityMatrix> bt;
            if (need_a)
                at = DensityMatrix::trusted(
                    partial_trace(joint, da, db, Factor::fast));
            if (need_b)
                bt = DensityMatrix::trusted(
                    partial_trace(joint, da, db, Factor::slow));
            for (std::size_t c = 0; c < parsed.size(); ++c) {
                const bool on_a = parsed[c].side == Side::ancilla;
                const double value = eval_channel(parsed[c], on_a ? *at : *bt,
                                                  on_a ? obs_a : obs_b);
                if (!std::isfinite(value))
                    throw std::runtime_error("channel '" + out.names[c] +
                                             "' produced a non-finite value");
                out.columns[c][p] = value;
            }
        } catch (const NearPureDivergence& e) {
#pragma omp critical(onset_traj_err)
            if (!failed.load()) {
                near_pure = true;
                near_pure_eigenvalue = e.eigenvalue();
                failure = e.what();
                failed.store(true);
            }
        } catch (const std::exception& e) {
#pragma omp critical(onset_traj_err)
            if (!failed.load()) {
                failure = e.what();
                failed.store(true);
            }
        }
    }
    if (near_pure) throw NearPureDivergence(near_pure_eigenvalue, tol::log_floor);
    if (failed.load()) throw std::runtime_error("sample_trajectory: " + failure);
    return out;
}

double fd_derivative(const std::function<double(double)>& f, double t0,
                     int order, double step) {
    if (!(step > 0.0) || !std::isfinite(step))
        throw std::invalid_argument("fd_derivative: step must be positive");
    const double h = step;
    switch (order) {
        case 1:
            return (-f(t0 + 2 * h) + 8 * f(t0 + h) - 8 * f(t0 - h) +
                    f(t0 - 2 * h)) /
                   (12 * h);
        case 2:
            return (-f(t0 + 2 * h) + 16 * f(t0 + h) - 30 * f(t0) +
                    16 * f(t0 - h) - f(t0 - 2 * h)) /
                   (12 * h * h);
        default:
            throw std::invalid_argument("fd_derivative: order must be 1 or 2");
    }
}

namespace {

double rel_against(double value, double reference) {
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-12);
}

}  // namespace

OnsetIdentityReport onset_identities(const DensityMatrix& rho_a,
                                     const DensityMatrix& rho_b,
                                     const ProductInteraction& h, int n,
                                     double step) {
    if (n < 2) throw std::invalid_argument("onset_identities: n must be >= 2");
    if (rho_a.dim() != h.ancilla.dim() || rho_b.dim() != h.system.dim())
        throw std::invalid_argument("onset_identities: factor dims disagree with h");

    OnsetIdentityReport r;
    r.n = n;
    r.step = step;
    r.coupling = h.coupling;

    const std::size_t da = rho_a.dim();
    const std::size_t db = rho_b.dim();
    const DensityMatrix rho0 =
        DensityMatrix::trusted(kron(rho_a.mat(), rho_b.mat()));
    const JointEvolver evolver(rho0, h);
    const auto reduced_b = [&](double t) {
        return DensityMatrix::trusted(
            partial_trace(evolver.state_at(t), da, db, Factor::slow));
    };

    const auto gamma = [&](double t) { return n_purity(reduced_b(t), n); };
    r.gamma_dot0 = fd_derivative(gamma, 0.0, 1, step);
    r.gamma_ddot0 = fd_derivative(gamma, 0.0, 2, step);

    r.ancilla_variance = variance(rho_a, h.ancilla);
    r.fragility = fragility_n(rho_b, h.system, n);
    const double eps2 = h.coupling * h.coupling;
    r.predicted_ddot = -4.0 * eps2 * r.ancilla_variance * r.fragility;
    r.curvature_rel_error = rel_against(r.gamma_ddot0, r.predicted_ddot);

    r.system_variance = variance(rho_b, h.system);
    if (n == 2 && n_purity(rho_b, 2) > 1.0 - 1e-10) {
        r.system_pure = true;
        r.pure_predicted_ddot =
            -4.0 * eps2 * r.ancilla_variance * r.system_variance;
        r.pure_rel_error = rel_against(r.gamma_ddot0, r.pure_predicted_ddot);
    }

    if (herm_eigvals(rho_b.mat()).front() > tol::log_floor) {
        r.entropy_checked = true;
        const auto entropy = [&](double t) {
            return von_neumann_entropy(reduced_b(t));
        };
        r.entropy_ddot0 = fd_derivative(entropy, 0.0, 2, step);
        r.entropy_fragility = fragility_1(rho_b, h.system);
        r.entropy_predicted_ddot =
            2.0 * eps2 * r.ancilla_variance * r.entropy_fragility;
        r.entropy_rel_error = rel_against(r.entropy_ddot0, r.entropy_predicted_ddot);
    }

    // Same system, no ancilla: a one-dimensional slow factor turns the
    // interaction into a plain system Hamiltonian.
    const ProductInteraction solo(ComplexMatrix::identity(1), h.system.mat(),
                                  h.coupling);
    const JointEvolver solo_evolver(rho_b, solo);
    const auto solo_gamma = [&](double t) {
        return n_purity(DensityMatrix::trusted(solo_evolver.state_at(t)), n);
    };
    r.unipartite_ddot = fd_derivative(solo_gamma, 0.0, 2, step);

    return r;
}

double n_purity_real(const DensityMatrix& rho, double alpha) {
    if (!(alpha > 0.0))
        throw std::invalid_argument("n_purity_real: alpha must be > 0");
    double acc = 0.0;
    for (double lam : herm_eigvals(rho.mat()))
        if (lam > 0.0) acc += std::pow(lam, alpha);
    return acc;
}

VnLimitReport vn_derivative_limit_check(
    const std::function<DensityMatrix(double)>& path, double t0,
    std::span<const double> eps_list, double step) {
    VnLimitReport report;
    report.vn_rate = fd_derivative(
        [&](double t) { return von_neumann_entropy(path(t)); }, t0, 1, step);
    for (double eps : eps_list) {
        if (!(eps > 0.0))
            throw std::invalid_argument("vn_derivative_limit_check: eps must be > 0");
        const double gamma_rate = fd_derivative(
            [&](double t) { return n_purity_real(path(t), 1.0 + eps); }, t0, 1,
            step);
        const double limit_rate = -gamma_rate / eps;
        report.points.push_back(
            {eps, limit_rate, std::abs(limit_rate - report.vn_rate)});
    }
    return report;
}

}  // namespace onset
