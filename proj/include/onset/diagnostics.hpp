// diagnostics.hpp - scalar readouts of a state: purities, entropies,
// coherence, variance.
//
// Conventions, fixed project-wide: logarithms are natural, 0*log(0) is 0,
// and traces that are real in exact arithmetic are extracted by real part
// after an imaginary-residue check (tol::imag_residue) so a silently
// non-Hermitian input cannot slip through as a plausible number.
#pragma once

#include <vector>

#include "onset/eig.hpp"
#include "onset/matrix.hpp"
#include "onset/states.hpp"

namespace onset {

/// A Hermitian operator bundled with its spectral decomposition, computed
/// once at construction and reused by every eigenbasis-side diagnostic.
class HermitianObservable {
public:
    explicit HermitianObservable(ComplexMatrix m, double tol = tol::hermitian);

    const ComplexMatrix& mat() const { return mat_; }
    const HermitianEigen& eig() const { return eig_; }
    std::size_t dim() const { return mat_.dim(); }

private:
    ComplexMatrix mat_;
    HermitianEigen eig_;
};

/// Cluster ascending eigenvalues into degenerate groups: consecutive values
/// closer than tol::degenerate_gap relative to the spectral scale share a
/// group. Returns a group index per eigenvalue.
std::vector<std::size_t> degenerate_groups(std::span<const double> eigenvalues);

/// tr(rho^n), integer n >= 1.
double n_purity(const DensityMatrix& rho, int n);

double purity(const DensityMatrix& rho);

/// 1 - tr(rho^2).
double mixedness(const DensityMatrix& rho);

/// Renyi entropy log(tr(rho^n)) / (1 - n), integer n >= 2.
double renyi_entropy(const DensityMatrix& rho, int n);

/// Renyi entropy at real order alpha > 1, evaluated through the spectrum.
/// Exists for limit checks (alpha -> 1) that integer orders cannot express.
double renyi_entropy_real(const DensityMatrix& rho, double alpha);

/// von Neumann entropy -sum lam log(lam), the n -> 1 limit of the above.
double von_neumann_entropy(const DensityMatrix& rho);

/// Squared 2-norm of the off-diagonal part of rho in the eigenbasis of the
/// observable, with entries inside a degenerate eigenvalue block not counted
/// (dephasing cannot remove them).
double coherence_2norm(const DensityMatrix& rho, const HermitianObservable& b);

/// <B^2> - <B>^2.
double variance(const DensityMatrix& rho, const HermitianObservable& b);

/// Two-level decomposition: the variance over twice its maximum value
/// (gap/2)^2 equals mixedness plus 2-norm coherence. Requires dim 2 and a
/// nondegenerate observable. normalized_variance is computed from the moment
/// formula, so the identity is a real cross-check rather than a tautology.
struct QubitVarianceSplit {
    double normalized_variance;
    double mixedness;
    double coherence;
};
QubitVarianceSplit qubit_variance_decomposition(const DensityMatrix& rho,
                                                const HermitianObservable& b);

/// Real part of a trace that must be real, with the residue check described
/// at the top of this header.
double real_checked(cplx z, const char* what);

}  // namespace onset
