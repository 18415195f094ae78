// ops.hpp - stock operators: Paulis, ladder operators, projectors.
#pragma once

#include <cmath>
#include <stdexcept>

#include "onset/matrix.hpp"

namespace onset::ops {

// ---------------- qubit ----------------

inline ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

inline ComplexMatrix pauli_y() {
    ComplexMatrix m(2);
    m(0, 1) = cplx(0.0, -1.0);
    m(1, 0) = cplx(0.0, 1.0);
    return m;
}

inline ComplexMatrix pauli_z() { return ComplexMatrix::diagonal({1.0, -1.0}); }

/// |i><j| in dimension dim.
inline ComplexMatrix ketbra(std::size_t dim, std::size_t i, std::size_t j) {
    if (i >= dim || j >= dim)
        throw std::invalid_argument("ketbra: index out of range");
    ComplexMatrix m(dim);
    m(i, j) = 1.0;
    return m;
}

// ---------------- bosonic mode (truncated Fock space) ----------------

/// Annihilation operator: a|n> = sqrt(n)|n-1>.
inline ComplexMatrix annihilation(std::size_t dim) {
    if (dim < 2) throw std::invalid_argument("annihilation: dim must be >= 2");
    ComplexMatrix m(dim);
    for (std::size_t n = 1; n < dim; ++n)
        m(n - 1, n) = std::sqrt(static_cast<double>(n));
    return m;
}

inline ComplexMatrix creation(std::size_t dim) {
    return dagger(annihilation(dim));
}

/// Number operator diag(0, 1, ..., dim-1).
inline ComplexMatrix number(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t n = 0; n < dim; ++n) m(n, n) = static_cast<double>(n);
    return m;
}

/// a + a^dagger.
inline ComplexMatrix quadrature(std::size_t dim) {
    ComplexMatrix m = annihilation(dim);
    for (std::size_t n = 1; n < dim; ++n) m(n, n - 1) = m(n - 1, n);
    return m;
}

}  // namespace onset::ops
