// states.cpp - state constructors and density matrix validation.
#include "onset/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "onset/eig.hpp"
#include "onset/rng.hpp"

namespace onset {

namespace {

void check_basics(const ComplexMatrix& m) {
    if (m.dim() == 0)
        throw std::invalid_argument("DensityMatrix: empty matrix");
    if (!m.all_finite())
        throw std::invalid_argument("DensityMatrix: non-finite entries");
    if (!is_hermitian(m, tol::hermitian))
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    const double trace_err = std::abs(trace(m) - cplx(1.0));
    if (trace_err > tol::trace_one)
        throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                    std::to_string(trace_err));
}

}  // namespace

DensityMatrix DensityMatrix::validated(ComplexMatrix m) {
    check_basics(m);
    const std::vector<double> w = herm_eigvals(m);
    if (w.front() < -tol::psd_slack)
        throw std::invalid_argument(
            "DensityMatrix: negative eigenvalue " + std::to_string(w.front()));
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) {
    check_basics(m);
    return DensityMatrix(std::move(m));
}

FockSpace::FockSpace(std::size_t dim_, double omega_, double nu_)
    : dim(dim_), omega(omega_), nu(nu_) {
    if (dim < 2) throw std::invalid_argument("FockSpace: dim must be >= 2");
    if (!(omega > 0.0)) throw std::invalid_argument("FockSpace: omega must be > 0");
    if (!std::isfinite(nu)) throw std::invalid_argument("FockSpace: nu must be finite");
}

DensityMatrix pure_state(std::span<const cplx> amplitudes) {
    double norm_sq = 0.0;
    for (cplx a : amplitudes) norm_sq += std::norm(a);
    if (!(norm_sq > 0.0) || !std::isfinite(norm_sq))
        throw std::invalid_argument("pure_state: amplitudes must have nonzero finite norm");
    ComplexMatrix m(amplitudes.size());
    for (std::size_t i = 0; i < amplitudes.size(); ++i)
        for (std::size_t j = 0; j < amplitudes.size(); ++j)
            m(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / norm_sq;
    return DensityMatrix::trusted(std::move(m));
}

DensityMatrix qubit_pair_pure(cplx r, cplx s) {
    const cplx amps[4] = {1.0, s, r, r * s};
    return pure_state(amps);
}

DensityMatrix qubit_atom(const QubitAtomState& q) {
    if (!(q.delta >= 0.0 && q.delta <= 1.0))
        throw std::invalid_argument("qubit_atom: delta must lie in [0, 1]");
    if (std::norm(q.alpha) > q.delta * (1.0 - q.delta) + tol::psd_slack)
        throw std::invalid_argument("qubit_atom: |alpha|^2 exceeds delta(1-delta)");
    ComplexMatrix m(2);
    m(0, 0) = q.delta;
    m(0, 1) = q.alpha;
    m(1, 0) = std::conj(q.alpha);
    m(1, 1) = 1.0 - q.delta;
    return DensityMatrix::trusted(std::move(m));
}

DensityMatrix qubit_atom(cplx alpha, double delta) {
    return qubit_atom(QubitAtomState{alpha, delta});
}

DensityMatrix vacuum(const FockSpace& fs) {
    ComplexMatrix m(fs.dim);
    m(0, 0) = 1.0;
    return DensityMatrix::trusted(std::move(m));
}

DensityMatrix thermal_state(const FockSpace& fs, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("thermal_state: beta must be > 0");
    ComplexMatrix m(fs.dim);
    double z = 0.0;
    for (std::size_t n = 0; n < fs.dim; ++n)
        z += std::exp(-beta * fs.omega * static_cast<double>(n));
    for (std::size_t n = 0; n < fs.dim; ++n)
        m(n, n) = std::exp(-beta * fs.omega * static_cast<double>(n)) / z;
    return DensityMatrix::trusted(std::move(m));
}

DensityMatrix fock_superposition(
    const FockSpace& fs, std::span<const std::pair<std::size_t, cplx>> coeffs) {
    std::vector<cplx> amps(fs.dim, cplx{});
    for (const auto& [level, c] : coeffs) {
        if (level >= fs.dim)
            throw std::invalid_argument("fock_superposition: level " +
                                        std::to_string(level) +
                                        " outside truncation");
        amps[level] += c;
    }
    return pure_state(amps);
}

DensityMatrix random_density(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            g(i, j) = cplx(rng.normal(), rng.normal());
    ComplexMatrix m = multiply_dagger(g, g);
    m *= 1.0 / trace(m).real();
    // G G^dagger is Hermitian positive by construction; rounding can leave
    // asymmetry of order machine epsilon, squeeze it out so validation holds.
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            const cplx sym = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = sym;
            m(j, i) = std::conj(sym);
        }
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = m(i, i).real();
    return DensityMatrix::validated(std::move(m));
}

ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            g(i, j) = cplx(rng.normal(), rng.normal());
    ComplexMatrix h(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return h;
}

}  // namespace onset
