// eig.cpp - LAPACK-backed Hermitian eigensolver.
#include "onset/eig.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "onset/kernels.hpp"

namespace onset {

namespace {

// zheevd overwrites its input; work on a copy and report failures loudly.
std::vector<double> zheevd(ComplexMatrix& work, char jobz, double tol) {
    if (!is_hermitian(work, tol))
        throw std::invalid_argument("herm_eig: matrix is not Hermitian");
    const auto n = static_cast<lapack_int>(work.dim());
    std::vector<double> w(work.dim());
    const lapack_int info = LAPACKE_zheevd(LAPACK_ROW_MAJOR, jobz, 'L', n,
                                           work.data(), n, w.data());
    if (info != 0)
        throw std::runtime_error("herm_eig: zheevd failed, info = " +
                                 std::to_string(info));
    return w;
}

}  // namespace

HermitianEigen herm_eig(const ComplexMatrix& h, double tol) {
    ComplexMatrix v = h;
    std::vector<double> w = zheevd(v, 'V', tol);
    return HermitianEigen{std::move(w), std::move(v)};
}

std::vector<double> herm_eigvals(const ComplexMatrix& h, double tol) {
    ComplexMatrix scratch = h;
    return zheevd(scratch, 'N', tol);
}

ComplexMatrix matrix_fn(const HermitianEigen& eig,
                        const std::function<cplx(double)>& f) {
    const std::size_t n = eig.eigenvalues.size();
    std::vector<cplx> fw(n);
    for (std::size_t i = 0; i < n; ++i) {
        fw[i] = f(eig.eigenvalues[i]);
        if (!std::isfinite(fw[i].real()) || !std::isfinite(fw[i].imag()))
            throw std::domain_error(
                "matrix_fn: f is not finite at eigenvalue " +
                std::to_string(eig.eigenvalues[i]));
    }
    ComplexMatrix scaled(n);
    kernels::scale_columns(eig.eigenvectors.data(), fw.data(), scaled.data(), n);
    return multiply_dagger(scaled, eig.eigenvectors);
}

ComplexMatrix matrix_fn(const ComplexMatrix& h,
                        const std::function<cplx(double)>& f) {
    return matrix_fn(herm_eig(h), f);
}

}  // namespace onset
