// kernels_omp.cpp - production kernels, OpenMP over the outer output index.
//
// Each body is the serial twin with a parallel-for on a loop whose iterations
// touch disjoint output elements and whose inner accumulation order is
// untouched. That keeps results bit-identical to kernels::serial, which the
// test suite asserts on random inputs.
#include "onset/kernels.hpp"

#include <cmath>
#include <cstdint>

namespace onset::kernels {

void matmul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        cplx* out_row = out + i * n;
        for (std::size_t j = 0; j < n; ++j) out_row[j] = cplx{};
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            const cplx* b_row = b + k * n;
            for (std::size_t j = 0; j < n; ++j) out_row[j] += aik * b_row[j];
        }
    }
}

void matmul_dagger(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        const cplx* a_row = a + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const cplx* b_row = b + j * n;
            cplx acc{};
            for (std::size_t k = 0; k < n; ++k)
                acc += a_row[k] * std::conj(b_row[k]);
            out[i * n + j] = acc;
        }
    }
}

void kron(const cplx* a, std::size_t na, const cplx* b, std::size_t nb,
          cplx* out) {
    const std::size_t n = na * nb;
#pragma omp parallel for schedule(static)
    for (std::int64_t row = 0; row < static_cast<std::int64_t>(n); ++row) {
        const std::size_t i = static_cast<std::size_t>(row) / nb;
        const std::size_t k = static_cast<std::size_t>(row) % nb;
        cplx* out_row = out + row * n;
        const cplx* b_row = b + k * nb;
        for (std::size_t j = 0; j < na; ++j) {
            const cplx aij = a[i * na + j];
            for (std::size_t l = 0; l < nb; ++l)
                out_row[j * nb + l] = aij * b_row[l];
        }
    }
}

void partial_trace_slow(const cplx* m, std::size_t na, std::size_t nb,
                        cplx* out) {
    const std::size_t n = na * nb;
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(nb); ++k)
        for (std::size_t l = 0; l < nb; ++l) {
            cplx acc{};
            for (std::size_t i = 0; i < na; ++i)
                acc += m[(i * nb + k) * n + (i * nb + l)];
            out[k * nb + l] = acc;
        }
}

void partial_trace_fast(const cplx* m, std::size_t na, std::size_t nb,
                        cplx* out) {
    const std::size_t n = na * nb;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(na); ++i)
        for (std::size_t j = 0; j < na; ++j) {
            cplx acc{};
            for (std::size_t k = 0; k < nb; ++k)
                acc += m[(i * nb + k) * n + (j * nb + k)];
            out[i * na + j] = acc;
        }
}

void phase_conjugate(const cplx* m, const double* lam, double t, cplx* out,
                     std::size_t n) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        const cplx pi = std::polar(1.0, t * lam[i]);
        for (std::size_t j = 0; j < n; ++j)
            out[i * n + j] = pi * std::polar(1.0, -t * lam[j]) * m[i * n + j];
    }
}

void scale_columns(const cplx* v, const cplx* f, cplx* out, std::size_t n) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = v[i * n + j] * f[j];
}

}  // namespace onset::kernels
