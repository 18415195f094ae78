// fragility.cpp - fragility in its three guises: commutator trace, eigenbasis
// sum, and the log-weighted entropy form.
#include "onset/fragility.hpp"

#include <cmath>
#include <string>

namespace onset {

namespace {

void require_match(const DensityMatrix& rho, const HermitianObservable& b,
                   const char* what) {
    if (rho.dim() != b.dim())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

double fragility_n(const DensityMatrix& rho, const HermitianObservable& b,
                   int n) {
    require_match(rho, b, "fragility_n");
    if (n < 2) throw std::invalid_argument("fragility_n: n must be >= 2");
    ComplexMatrix power = rho.mat();  // rho^(n-1)
    for (int k = 2; k < n; ++k) power = power * rho.mat();
    const ComplexMatrix comm = commutator(b.mat(), rho.mat());
    const cplx t = trace_product(power, comm * b.mat());
    return -0.5 * n * real_checked(t, "fragility_n");
}

double fragility_2(const DensityMatrix& rho, const HermitianObservable& b) {
    require_match(rho, b, "fragility_2");
    // [B, rho] is anti-Hermitian, so -tr([B,rho]^2) = |[B,rho]|_F^2 and the
    // trace below is real and nonpositive up to rounding.
    const ComplexMatrix comm = commutator(b.mat(), rho.mat());
    return -0.5 * real_checked(trace_product(comm, comm), "fragility_2");
}

double fragility_2_eigenbasis(const DensityMatrix& rho,
                              const HermitianObservable& b) {
    require_match(rho, b, "fragility_2_eigenbasis");
    const ComplexMatrix rho_eb =
        conjugate_by_dagger(b.eig().eigenvectors, rho.mat());
    const auto& w = b.eig().eigenvalues;
    double acc = 0.0;
    for (std::size_t i = 0; i < rho_eb.dim(); ++i)
        for (std::size_t j = 0; j < rho_eb.dim(); ++j) {
            const double gap = w[i] - w[j];
            acc += 0.5 * gap * gap * std::norm(rho_eb(i, j));
        }
    return acc;
}

NearPureDivergence::NearPureDivergence(double eigenvalue, double floor)
    : std::domain_error("fragility_1: eigenvalue " + std::to_string(eigenvalue) +
                        " below floor " + std::to_string(floor) +
                        "; log(rho) diverges as the state approaches purity"),
      eigenvalue_(eigenvalue) {}

double fragility_1(const DensityMatrix& rho, const HermitianObservable& b,
                   double eigen_floor) {
    require_match(rho, b, "fragility_1");
    const HermitianEigen rho_eig = herm_eig(rho.mat());
    const auto& lam = rho_eig.eigenvalues;
    if (lam.front() < eigen_floor)
        throw NearPureDivergence(lam.front(), eigen_floor);
    const ComplexMatrix b_eb = conjugate_by_dagger(rho_eig.eigenvectors, b.mat());
    double acc = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (std::size_t k = i + 1; k < lam.size(); ++k)
            acc += (lam[i] - lam[k]) * (std::log(lam[i]) - std::log(lam[k])) *
                   std::norm(b_eb(i, k));
    return acc;
}

double variance_fragility_gap(const DensityMatrix& rho,
                              const HermitianObservable& b) {
    return variance(rho, b) - fragility_2(rho, b);
}

}  // namespace onset
