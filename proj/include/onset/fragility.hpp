// fragility.hpp - how strongly dephasing in the eigenbasis of an observable
// bites a state: the curvature coefficients of purity and entropy onset.
#pragma once

#include <stdexcept>

#include "onset/diagnostics.hpp"

namespace onset {

/// Order-n fragility -(n/2) tr(rho^(n-1) [B, rho] B), integer n >= 2.
/// Governs the initial curvature of tr(rho^n) under coupling through B.
double fragility_n(const DensityMatrix& rho, const HermitianObservable& b,
                   int n);

/// Order-2 fragility -(1/2) tr([B, rho]^2). Nonnegative for Hermitian
/// inputs; equals 1/2 the squared Frobenius norm of [B, rho].
double fragility_2(const DensityMatrix& rho, const HermitianObservable& b);

/// fragility_2 assembled in the eigenbasis of b:
/// 1/2 sum_{ij} (b_i - b_j)^2 |rho_ij|^2. Same number as fragility_2 by a
/// different route; kept as a cross-check and for weight-per-gap analysis.
double fragility_2_eigenbasis(const DensityMatrix& rho,
                              const HermitianObservable& b);

/// Thrown by fragility_1 when an eigenvalue of rho sits below the floor and
/// log(rho) would blow up.
class NearPureDivergence : public std::domain_error {
public:
    NearPureDivergence(double eigenvalue, double floor);
    double eigenvalue() const { return eigenvalue_; }

private:
    double eigenvalue_;
};

/// Order-1 fragility -tr(log(rho) [B, rho] B), the entropy-onset curvature
/// coefficient. Evaluated in the eigenbasis of rho as
/// sum_{i<k} (lam_i - lam_k)(log lam_i - log lam_k) |B_ik|^2, which is
/// manifestly nonnegative. Requires all eigenvalues above eigen_floor.
double fragility_1(const DensityMatrix& rho, const HermitianObservable& b,
                   double eigen_floor = tol::log_floor);

/// variance - fragility_2, which is >= 0 with equality exactly on pure
/// states: the share of the variance that dephasing cannot touch.
double variance_fragility_gap(const DensityMatrix& rho,
                              const HermitianObservable& b);

}  // namespace onset
