// scenarios.hpp - worked setups with closed-form reference curves: the two
// dephasing-qubit cases, the Fock-superposition environment, the single-mode
// light-matter model, the thermal field, and the normal-ordering
// combinatorics behind the light-matter expansion.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "onset/dynamics.hpp"

namespace onset {

// ---------------- case 1: commuting generator ----------------
// Qubit pair (|0> + r|1>) (x) (|0> + s|1>) evolving under
// exp(i eps t A (x) B) with A = diag(1,-1) and B diagonal with gap b_gap.
// Only the gap enters any formula below.

struct Case1Params {
    cplx r = 1.0;
    cplx s = 1.0;
    double eps = 1.0;
    double b_gap = 1.0;
};

/// 1 - tr(rho_B(t)^2) in closed form; lies in [0, 1/2].
double case1_mixedness(const Case1Params& p, double t);

/// 2-norm coherence of rho_B(t) w.r.t. B in closed form.
double case1_coherence(const Case1Params& p, double t);

/// The conserved value mixedness(t) + coherence(t) = 2|s|^2/(1+|s|^2)^2.
double case1_conserved_sum(const Case1Params& p);

/// Time-independent variance of B: b_gap^2 |s|^2/(1+|s|^2)^2.
double case1_variance(const Case1Params& p);

/// Numeric trajectory (mixedness, coherence, variance) with the closed
/// forms alongside as *_closed columns.
Trajectory case1_scenario(const Case1Params& p, std::span<const double> grid);

// ---------------- case 2: non-commuting generator ----------------
// Same initial state, but the system factor of the Hamiltonian is
// h_b = [[0, -i], [i, 0]] in the eigenbasis of B, which does not commute
// with B. Diagnostics are taken w.r.t. B = diag(1/2, -1/2) (unit gap).

struct Case2Params {
    cplx r = 1.0;
    cplx s = 0.0;
    double eps = 1.0;
};

/// The generator [[0, -i], [i, 0]].
ComplexMatrix case2_generator();

/// Closed-form reduced state of the primary qubit at time t.
DensityMatrix case2_reduced_state(cplx r, cplx s, double eps, double t);

/// Numeric trajectory (mixedness, coherence, variance) plus *_closed columns
/// evaluated on case2_reduced_state.
Trajectory case2_scenario(const Case2Params& p, std::span<const double> grid);

// ---------------- Fock-superposition environment ----------------
// Environment (|1> + r|2> + p|3>)/norm coupled through the number operator:
// U = exp(i eps t N (x) h_b), qubit starting in (|0> + s|1>)/norm.

struct FockEnvParams {
    cplx r = 0.5;
    cplx p = 0.2;
    cplx s = 0.0;
    double eps = 1.0;
    std::size_t fock_dim = 8;
};

/// Numeric qubit trajectory: purity, mixedness, coherence, variance, plus
/// variance_from_split = gap^2/2 (mixedness + coherence), which must agree
/// with variance pointwise for any two-level reduced state.
Trajectory fock_env_scenario(const FockEnvParams& p,
                             std::span<const double> grid);

// ---------------- single-mode light-matter model ----------------
// Qubit atom [[delta, alpha], [conj(alpha), 1-delta]] (written in the
// eigenbasis of sigma_x) and a field mode in vacuum, evolving under
// U = exp(i t nu sigma_x (x) (a + a^dagger)).

struct UdwParams {
    cplx alpha = 0.3;
    double delta = 0.5;
    double nu = 1.0;
    std::size_t fock_dim = 32;
};

/// Exact qubit 2-fragility w.r.t. sigma_x: 4|alpha|^2 e^(-4 nu^2 t^2).
double udw_qubit_fragility_exact(const UdwParams& p, double t);

/// Field 2-fragility closed form at nu = 1 with a parameterized transient:
/// delta^2 + (1-delta)^2 + 2 delta (1-delta) (1 - coeff t^2) e^(-4 t^2).
double udw_field_fragility_model(double delta, double t, double coeff);

/// Transient t^2 coefficient carried by the circulated closed form.
inline constexpr double udw_field_coeff_stated = 7.414213562373095;  // 6+sqrt(2)
/// Transient t^2 coefficient the numerics converge to. Truncated-Fock runs
/// at dims 32 through 256 fit this value with residual at machine precision,
/// and the displaced-vacuum algebra reproduces it; the stated 6+sqrt(2)
/// misses the converged curve by up to 2e-2 near t = 0.5. Both variants are
/// kept so the comparison stays visible in figures and verify output.
inline constexpr double udw_field_coeff_verified = 8.0;

/// The circulated closed form (coefficient 6+sqrt(2)), evaluated faithfully.
/// See udw_field_coeff_verified for why its transient is off.
double udw_field_fragility_exact(double delta, double t);

/// Least-squares fit of the transient t^2 coefficient from a sampled field
/// fragility curve at nu = 1.
double udw_field_coeff_fit(std::span<const double> times,
                           std::span<const double> f2_field, double delta);

/// Raised when doubling the Fock truncation up to the cap never brings two
/// successive runs within tol::truncation of each other.
class TruncationError : public std::runtime_error {
public:
    TruncationError(std::string what,
                    std::vector<std::pair<std::size_t, double>> history);
    /// (dimension of the larger run, max deviation from the previous run)
    const std::vector<std::pair<std::size_t, double>>& history() const {
        return history_;
    }

private:
    std::vector<std::pair<std::size_t, double>> history_;
};

struct UdwRun {
    Trajectory traj;
    std::size_t fock_dim;      // truncation the returned curves used
    double max_deviation;      // against the previous (half-size) run
};

/// Numeric light-matter trajectory with automatic truncation doubling until
/// successive runs agree within tol::truncation (error past
/// tol::truncation_max_dim). Default channels: f2_A (qubit w.r.t. sigma_x),
/// f2 (field w.r.t. nu (a+a^dagger)), purity_A, purity_B, variance_A,
/// variance.
UdwRun udw_numeric(const UdwParams& p, std::span<const double> grid);
UdwRun udw_numeric(const UdwParams& p, std::span<const double> grid,
                   std::span<const std::string> which,
                   double tolerance = tol::truncation,
                   std::size_t max_dim = tol::truncation_max_dim);

// ---------------- thermal field ----------------

/// Closed-form thermal 2-fragility nu^2 4 sinh^4(bw/2)/sinh^2(bw) with
/// bw = beta omega, evaluated as nu^2 tanh^2(bw/2) for overflow safety.
double thermal_fragility_exact(double beta, double omega, double nu);

/// fragility_2(thermal_state, nu (a+a^dagger)) on a fock_dim truncation.
double thermal_fragility_numeric(double beta, double omega, double nu,
                                 std::size_t fock_dim);

/// Sweep of beta*omega over [bw_min, bw_max] (linear, `points` samples):
/// times carry beta*omega, columns f2_exact and f2_numeric.
Trajectory thermal_sweep(double omega, double nu, double bw_min, double bw_max,
                         std::size_t points, std::size_t fock_dim);

// ---------------- normal ordering ----------------

/// Coefficients c_k with (a+a^dagger)^n = sum_k c_k Omega_k, where
/// Omega_k = sum_i C(k,i) a^dagger^(k-i) a^i and Omega_0 = 1. Returned as
/// (k, c_k) pairs with k descending from n in steps of 2;
/// c_k = (2i-1)!! C(n,2i) at k = n-2i. Exact integers; n capped at 32 so
/// every coefficient fits 64 bits.
std::vector<std::pair<int, long long>> normal_order_expand(int n);

/// Omega_k on a fock_dim truncation.
ComplexMatrix omega_operator(std::size_t fock_dim, int k);

/// |0>-component of exp(i theta (a+a^dagger))|0> summed literally through
/// order max_n: sum over even n of (i theta)^n (n-1)!!/n!. Converges to
/// e^(-theta^2/2). Successive even terms are built with the exact ratio
/// ((n-1)!!/n!) / ((n-3)!!/(n-2)!) = 1/n, so max_n is unbounded.
cplx expansion_vacuum_overlap(double theta, int max_n);

}  // namespace onset
