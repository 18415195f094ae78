// kernels_serial.cpp - reference implementations of the inner loops.
//
// Plain triple loops, no tiling tricks: these are the definition of correct
// output (including the exact accumulation order) that the parallel twins
// must reproduce bit for bit.
#include "onset/kernels.hpp"

#include <cmath>

namespace onset::kernels::serial {

void matmul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
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
    // out[i][j] = sum_k a[i][k] * conj(b[j][k]): row i of a against row j of b.
    for (std::size_t i = 0; i < n; ++i) {
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
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t k = 0; k < nb; ++k) {
            cplx* out_row = out + (i * nb + k) * n;
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
    for (std::size_t k = 0; k < nb; ++k)
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
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            cplx acc{};
            for (std::size_t k = 0; k < nb; ++k)
                acc += m[(i * nb + k) * n + (j * nb + k)];
            out[i * na + j] = acc;
        }
}

void phase_conjugate(const cplx* m, const double* lam, double t, cplx* out,
                     std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx pi = std::polar(1.0, t * lam[i]);
        for (std::size_t j = 0; j < n; ++j)
            out[i * n + j] = pi * std::polar(1.0, -t * lam[j]) * m[i * n + j];
    }
}

void scale_columns(const cplx* v, const cplx* f, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = v[i * n + j] * f[j];
}

}  // namespace onset::kernels::serial
