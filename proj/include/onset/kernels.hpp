// kernels.hpp - the data-parallel inner loops behind matrix.hpp.
//
// Every kernel in onset::kernels has a reference twin in onset::kernels::serial
// with the identical signature. The parallel versions split work by output
// element only (one writer per element, OpenMP over the outer index) and keep
// the per-element accumulation order the same as the serial code, so the two
// paths agree bit for bit. Tests and the benchmark target rely on that.
//
// Reductions to a scalar (traces, norms) stay serial on purpose: a parallel
// reduction would reassociate the sum and break determinism for no win at the
// dimensions this library targets.
#pragma once

#include <complex>
#include <cstddef>

namespace onset::kernels {

using cplx = std::complex<double>;

namespace serial {

/// out = a * b, all n x n row-major. out must not alias a or b.
void matmul(const cplx* a, const cplx* b, cplx* out, std::size_t n);

/// out = a * b^dagger. out must not alias a or b.
void matmul_dagger(const cplx* a, const cplx* b, cplx* out, std::size_t n);

/// out = kron(a, b); a is na x na (slow factor), b is nb x nb.
void kron(const cplx* a, std::size_t na, const cplx* b, std::size_t nb,
          cplx* out);

/// Trace out the slow factor: out[k][l] = sum_i m[(i,k)][(i,l)], out nb x nb.
void partial_trace_slow(const cplx* m, std::size_t na, std::size_t nb,
                        cplx* out);

/// Trace out the fast factor: out[i][j] = sum_k m[(i,k)][(j,k)], out na x na.
void partial_trace_fast(const cplx* m, std::size_t na, std::size_t nb,
                        cplx* out);

/// out[i][j] = exp(i*t*(lam[i]-lam[j])) * m[i][j]; unitary evolution in the
/// eigenbasis of a Hamiltonian with spectrum lam.
void phase_conjugate(const cplx* m, const double* lam, double t, cplx* out,
                     std::size_t n);

/// out[i][j] = v[i][j] * f[j]; right-multiplication by diag(f).
void scale_columns(const cplx* v, const cplx* f, cplx* out, std::size_t n);

}  // namespace serial

// Production entry points. OpenMP-parallel when built with OpenMP, otherwise
// they fall through to the serial bodies.
void matmul(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void matmul_dagger(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void kron(const cplx* a, std::size_t na, const cplx* b, std::size_t nb,
          cplx* out);
void partial_trace_slow(const cplx* m, std::size_t na, std::size_t nb,
                        cplx* out);
void partial_trace_fast(const cplx* m, std::size_t na, std::size_t nb,
                        cplx* out);
void phase_conjugate(const cplx* m, const double* lam, double t, cplx* out,
                     std::size_t n);
void scale_columns(const cplx* v, const cplx* f, cplx* out, std::size_t n);

}  // namespace onset::kernels
