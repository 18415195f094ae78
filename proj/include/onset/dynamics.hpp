// dynamics.hpp - unitary evolution under product interactions and the
// time-resolved diagnostics sampled along it.
#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "onset/diagnostics.hpp"
#include "onset/fragility.hpp"
#include "onset/states.hpp"

namespace onset {

/// Interaction Hamiltonian coupling * A (x) B between an ancilla (slow
/// factor) and a system (fast factor).
struct ProductInteraction {
    HermitianObservable ancilla;
    HermitianObservable system;
    double coupling;

    ProductInteraction(ComplexMatrix a, ComplexMatrix b, double eps = 1.0);
    std::size_t joint_dim() const { return ancilla.dim() * system.dim(); }
};

/// Propagates a joint state under U(t) = exp(+i coupling t A (x) B).
///
/// The joint Hamiltonian is eigendecomposed once; each state_at(t) is then a
/// phase twist in the eigenbasis plus two matrix products, so sampling a
/// dense time grid costs two multiplications per point.
class JointEvolver {
public:
    JointEvolver(const DensityMatrix& rho0, const ProductInteraction& h);

    /// rho(t) as a raw matrix; unitarity preserves the spectrum, so callers
    /// wrap it with DensityMatrix::trusted.
    ComplexMatrix state_at(double t) const;

    std::size_t dim() const { return rho0_eb_.dim(); }

private:
    HermitianEigen joint_eig_;
    ComplexMatrix rho0_eb_;  // initial state rotated into the eigenbasis
    double coupling_;
};

/// One-shot convenience around JointEvolver.
DensityMatrix evolve(const DensityMatrix& rho0, const ProductInteraction& h,
                     double t);

/// Uniform grid 0 .. t_max inclusive.
std::vector<double> linspace(double t_max, std::size_t points);

/// Named time series. Columns parallel the channel names; every value is
/// finite by construction (a diagnostic that cannot be evaluated throws at
/// sampling time instead of leaving holes).
struct Trajectory {
    std::vector<double> times;
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;

    const std::vector<double>& series(std::string_view name) const;
    bool has(std::string_view name) const;
};

/// Sample diagnostics of the reduced factors along the evolution of
/// rho_a (x) rho_b under h. Channel tokens:
///
///   purity_A purity_B            tr(rho^2) of a named factor
///   mixedness coherence variance f1 f2 f<N> renyi<N> vn
///                                 system factor (B); append _A for the
///                                 ancilla-side counterpart
///
/// coherence/variance/fragility channels are taken with respect to the
/// matching factor of h unless ref_a / ref_b supply a different observable.
/// Unknown tokens throw std::invalid_argument. Grid points are evaluated
/// independently (OpenMP), each writing its own row.
Trajectory sample_trajectory(const DensityMatrix& rho_a,
                             const DensityMatrix& rho_b,
                             const ProductInteraction& h,
                             std::span<const double> grid,
                             std::span<const std::string> channels,
                             const HermitianObservable* ref_a = nullptr,
                             const HermitianObservable* ref_b = nullptr);

/// Five-point central finite difference of f at t0; order 1 or 2.
double fd_derivative(const std::function<double(double)>& f, double t0,
                     int order, double step = tol::fd_step);

/// Numerical check of the onset identities for tr(rho_B(t)^n) around t = 0:
///
///   (i)   first derivative vanishes
///   (ii)  second derivative = -4 coupling^2 var(A) f_n(rho_B, B)
///   (iii) for pure rho_B, n = 2: f_2 collapses to var(B)
///   (iv)  entropy curvature = +2 coupling^2 var(A) f_1(rho_B, B)
///   (v)   without an ancilla the purity curvature vanishes
///
/// All derivatives are five-point finite differences at the given step.
struct OnsetIdentityReport {
    int n = 2;
    double step = tol::fd_step;
    double coupling = 1.0;

    double gamma_dot0 = 0.0;      // (i), should vanish
    double gamma_ddot0 = 0.0;
    double ancilla_variance = 0.0;
    double fragility = 0.0;       // f_n of rho_B w.r.t. B
    double predicted_ddot = 0.0;  // (ii)
    double curvature_rel_error = 0.0;

    bool system_pure = false;     // (iii), reported when n == 2
    double system_variance = 0.0;
    double pure_predicted_ddot = 0.0;
    double pure_rel_error = 0.0;

    bool entropy_checked = false;  // (iv), skipped when rho_B is near pure
    double entropy_ddot0 = 0.0;
    double entropy_fragility = 0.0;  // f_1
    double entropy_predicted_ddot = 0.0;
    double entropy_rel_error = 0.0;

    double unipartite_ddot = 0.0;  // (v), should vanish
};

OnsetIdentityReport onset_identities(const DensityMatrix& rho_a,
                                     const DensityMatrix& rho_b,
                                     const ProductInteraction& h, int n,
                                     double step = tol::fd_step);

/// Convergence of the Renyi entropy rate to the von Neumann rate as the
/// order approaches 1 from above: for each eps, compares
/// -gamma_dot_(1+eps)(t0) / eps against the finite-difference d/dt of the
/// von Neumann entropy along the path.
struct VnLimitPoint {
    double epsilon;
    double limit_rate;
    double abs_diff;
};
struct VnLimitReport {
    double vn_rate;
    std::vector<VnLimitPoint> points;
};
VnLimitReport vn_derivative_limit_check(
    const std::function<DensityMatrix(double)>& path, double t0,
    std::span<const double> eps_list, double step = tol::fd_step);

/// tr(rho^alpha) at real alpha > 0 through the spectrum; negative rounding
/// dust in the eigenvalues is clamped to zero.
double n_purity_real(const DensityMatrix& rho, double alpha);

}  // namespace onset
