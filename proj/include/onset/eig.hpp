// eig.hpp - Hermitian eigendecomposition and functions of Hermitian matrices.
#pragma once

#include <functional>
#include <vector>

#include "onset/matrix.hpp"
#include "onset/tolerances.hpp"

namespace onset {

/// Spectral decomposition of a Hermitian matrix: h = V diag(w) V^dagger.
struct HermitianEigen {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column i pairs with eigenvalues[i]
};

/// Full decomposition. Throws std::invalid_argument if h fails the
/// hermiticity check at tol.
HermitianEigen herm_eig(const ComplexMatrix& h, double tol = tol::hermitian);

/// Eigenvalues only (ascending), skipping the eigenvector work.
std::vector<double> herm_eigvals(const ComplexMatrix& h,
                                 double tol = tol::hermitian);

/// f applied to h through its spectrum: V diag(f(w)) V^dagger. Throws
/// std::domain_error if f returns a non-finite value on any eigenvalue.
ComplexMatrix matrix_fn(const HermitianEigen& eig,
                        const std::function<cplx(double)>& f);
ComplexMatrix matrix_fn(const ComplexMatrix& h,
                        const std::function<cplx(double)>& f);

}  // namespace onset
