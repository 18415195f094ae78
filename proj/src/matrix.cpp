// matrix.cpp - ComplexMatrix plumbing over the kernels.
#include "onset/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "onset/kernels.hpp"

namespace onset {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* what) {
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim * dim)
        throw std::invalid_argument("ComplexMatrix: entry count must be dim^2");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> d) {
    return diagonal(std::span<const double>(d.begin(), d.size()));
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](cplx z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs, "operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs, "operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
    for (auto& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
}

ComplexMatrix operator*(cplx scale, ComplexMatrix m) {
    m *= scale;
    return m;
}

ComplexMatrix operator*(ComplexMatrix m, cplx scale) {
    m *= scale;
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "operator*");
    ComplexMatrix out(a.dim());
    kernels::matmul(a.data(), b.data(), out.data(), a.dim());
    return out;
}

ComplexMatrix multiply_dagger(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "multiply_dagger");
    ComplexMatrix out(a.dim());
    kernels::matmul_dagger(a.data(), b.data(), out.data(), a.dim());
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            out(j, i) = std::conj(m(i, j));
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

cplx trace(const ComplexMatrix& m) {
    cplx acc{};
    for (std::size_t i = 0; i < m.dim(); ++i) acc += m(i, i);
    return acc;
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "trace_product");
    cplx acc{};
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) acc += a(i, j) * b(j, i);
    return acc;
}

double frobenius_norm(const ComplexMatrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) acc += std::norm(m.data()[i]);
    return std::sqrt(acc);
}

double max_abs(const ComplexMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i)
        worst = std::max(worst, std::abs(m.data()[i]));
    return worst;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i; j < m.dim(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.dim() * b.dim());
    kernels::kron(a.data(), a.dim(), b.data(), b.dim(), out.data());
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Factor traced_out) {
    if (m.dim() != dim_a * dim_b)
        throw std::invalid_argument("partial_trace: dim != dim_a * dim_b");
    if (traced_out == Factor::slow) {
        ComplexMatrix out(dim_b);
        kernels::partial_trace_slow(m.data(), dim_a, dim_b, out.data());
        return out;
    }
    ComplexMatrix out(dim_a);
    kernels::partial_trace_fast(m.data(), dim_a, dim_b, out.data());
    return out;
}

ComplexMatrix conjugate_by(const ComplexMatrix& v, const ComplexMatrix& m) {
    return v * multiply_dagger(m, v);
}

ComplexMatrix conjugate_by_dagger(const ComplexMatrix& v,
                                  const ComplexMatrix& m) {
    return dagger(v) * (m * v);
}

}  // namespace onset
