// matrix.hpp - dense square complex matrices and the algebra built on them.
//
// Row-major std::complex<double> storage. Every heavier operation forwards to
// the kernels in kernels.hpp, so the parallel/serial split lives there and
// this header stays arithmetic-free.
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace onset {

using cplx = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
        if (dim == 0) throw std::invalid_argument("ComplexMatrix: dim 0");
    }
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> d);
    static ComplexMatrix diagonal(std::span<const cplx> d);
    static ComplexMatrix diagonal(std::initializer_list<double> d);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return data_.size(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx scale);

private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, cplx scale);

/// Matrix product, kernel-backed.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// a * b^dagger without materializing the adjoint.
ComplexMatrix multiply_dagger(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix dagger(const ComplexMatrix& m);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

cplx trace(const ComplexMatrix& m);
/// tr(a*b) in O(dim^2) without forming the product.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);

/// Kronecker product; the first argument is the slow (outer) factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Which tensor factor to trace out of a (dim_a*dim_b)-dimensional operator.
enum class Factor { slow, fast };

/// Partial trace of m over one factor of dim_a (slow) x dim_b (fast).
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Factor traced_out);

/// V * m * V^dagger.
ComplexMatrix conjugate_by(const ComplexMatrix& v, const ComplexMatrix& m);
/// V^dagger * m * V.
ComplexMatrix conjugate_by_dagger(const ComplexMatrix& v, const ComplexMatrix& m);

}  // namespace onset
