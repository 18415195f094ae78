// tolerances.hpp - the numerical thresholds used across the library.
//
// Collected in one place so the CLI help text, the verify suites and the
// library bodies cannot drift apart. Absolute unless noted.
#pragma once

namespace onset::tol {

/// Hermiticity check: max |m - m^dagger| entrywise.
inline constexpr double hermitian = 1e-10;

/// Density matrix trace: |tr(rho) - 1|.
inline constexpr double trace_one = 1e-10;

/// Density matrix positivity: smallest eigenvalue may dip this far below 0.
inline constexpr double psd_slack = 1e-10;

/// Relative eigenvalue gap below which two observable eigenvalues count as
/// degenerate (coherence blocks, qubit decompositions).
inline constexpr double degenerate_gap = 1e-8;

/// Largest imaginary residue tolerated when a trace that is real in exact
/// arithmetic is extracted from complex intermediates.
inline constexpr double imag_residue = 1e-8;

/// Eigenvalue floor below which log(rho) quantities refuse to evaluate.
inline constexpr double log_floor = 1e-12;

/// Default finite-difference step for time derivatives.
inline constexpr double fd_step = 1e-3;

/// Fock truncation: max deviation between successive doubled dimensions at
/// which a trajectory counts as converged.
inline constexpr double truncation = 1e-8;

/// Fock truncation: dimension past which non-convergence becomes an error.
inline constexpr int truncation_max_dim = 256;

}  // namespace onset::tol
