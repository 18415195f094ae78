// states.hpp - density matrices and the state constructors used throughout.
#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "onset/matrix.hpp"
#include "onset/tolerances.hpp"

namespace onset {

/// A density matrix with its defining properties checked on construction.
///
/// validated() is the front door: hermiticity, unit trace and positive
/// semidefiniteness (smallest eigenvalue >= -psd_slack). trusted() skips the
/// spectrum check for matrices produced by provably spectrum-preserving
/// steps, chiefly unitary conjugation and partial traces of valid states,
/// where the eigensolve would double the cost of every trajectory point.
class DensityMatrix {
public:
    static DensityMatrix validated(ComplexMatrix m);
    static DensityMatrix trusted(ComplexMatrix m);

    const ComplexMatrix& mat() const { return mat_; }
    std::size_t dim() const { return mat_.dim(); }

private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
    ComplexMatrix mat_;
};

/// Truncated bosonic mode: dim Fock levels, frequency omega, coupling nu.
/// The coupling absorbs any mode-function normalization.
struct FockSpace {
    std::size_t dim;
    double omega;
    double nu;
    FockSpace(std::size_t dim, double omega, double nu = 1.0);
};

/// Two-level reduced state [[delta, alpha], [conj(alpha), 1-delta]].
struct QubitAtomState {
    cplx alpha;
    double delta;
};

/// Normalized projector onto span of the amplitude vector.
DensityMatrix pure_state(std::span<const cplx> amplitudes);

/// Product state (|0> + r|1>) (x) (|0> + s|1>), normalized; the first factor
/// is the slow index.
DensityMatrix qubit_pair_pure(cplx r, cplx s);

/// Density matrix of a QubitAtomState; requires 0 <= delta <= 1 and
/// |alpha|^2 <= delta(1-delta).
DensityMatrix qubit_atom(const QubitAtomState& q);
DensityMatrix qubit_atom(cplx alpha, double delta);

DensityMatrix vacuum(const FockSpace& fs);

/// Gibbs state of omega * number at inverse temperature beta, normalized on
/// the truncation.
DensityMatrix thermal_state(const FockSpace& fs, double beta);

/// Pure superposition sum_k c_k |n_k> from (level, coefficient) pairs.
DensityMatrix fock_superposition(const FockSpace& fs,
                                 std::span<const std::pair<std::size_t, cplx>> coeffs);

/// Full-rank random density matrix G G^dagger / tr, Ginibre G. Deterministic
/// in the seed (see rng.hpp).
DensityMatrix random_density(std::size_t dim, std::uint64_t seed);

/// Random Hermitian matrix (G + G^dagger) / 2, deterministic in the seed.
ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed);

}  // namespace onset
