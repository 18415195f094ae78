// diagnostics.cpp - scalar state readouts.
#include "onset/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace onset {

HermitianObservable::HermitianObservable(ComplexMatrix m, double tol)
    : mat_(std::move(m)), eig_(herm_eig(mat_, tol)) {}

std::vector<std::size_t> degenerate_groups(std::span<const double> w) {
    if (!std::is_sorted(w.begin(), w.end()))
        throw std::invalid_argument("degenerate_groups: eigenvalues not ascending");
    double scale = 1.0;
    for (double x : w) scale = std::max(scale, std::abs(x));
    const double thr = tol::degenerate_gap * scale;
    std::vector<std::size_t> group(w.size());
    std::size_t g = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] - w[i - 1] > thr) ++g;
        group[i] = g;
    }
    return group;
}

double real_checked(cplx z, const char* what) {
    if (std::abs(z.imag()) > tol::imag_residue)
        throw std::runtime_error(std::string(what) +
                                 ": imaginary residue " +
                                 std::to_string(z.imag()) +
                                 " exceeds tolerance");
    return z.real();
}

double n_purity(const DensityMatrix& rho, int n) {
    if (n < 1) throw std::invalid_argument("n_purity: n must be >= 1");
    if (n == 1) return real_checked(trace(rho.mat()), "n_purity");
    ComplexMatrix power = rho.mat();
    for (int k = 2; k < n; ++k) power = power * rho.mat();
    return real_checked(trace_product(power, rho.mat()), "n_purity");
}

double purity(const DensityMatrix& rho) { return n_purity(rho, 2); }

double mixedness(const DensityMatrix& rho) { return 1.0 - n_purity(rho, 2); }

double renyi_entropy(const DensityMatrix& rho, int n) {
    if (n < 2) throw std::invalid_argument("renyi_entropy: n must be >= 2");
    return std::log(n_purity(rho, n)) / (1.0 - n);
}

double renyi_entropy_real(const DensityMatrix& rho, double alpha) {
    if (!(alpha > 1.0))
        throw std::invalid_argument("renyi_entropy_real: alpha must be > 1");
    double acc = 0.0;
    for (double lam : herm_eigvals(rho.mat()))
        if (lam > 0.0) acc += std::pow(lam, alpha);
    return std::log(acc) / (1.0 - alpha);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double acc = 0.0;
    for (double lam : herm_eigvals(rho.mat()))
        if (lam > 0.0) acc -= lam * std::log(lam);
    return acc;
}

double coherence_2norm(const DensityMatrix& rho, const HermitianObservable& b) {
    if (rho.dim() != b.dim())
        throw std::invalid_argument("coherence_2norm: dimension mismatch");
    const ComplexMatrix rho_eb =
        conjugate_by_dagger(b.eig().eigenvectors, rho.mat());
    const std::vector<std::size_t> group = degenerate_groups(b.eig().eigenvalues);
    double acc = 0.0;
    for (std::size_t i = 0; i < rho_eb.dim(); ++i)
        for (std::size_t j = 0; j < rho_eb.dim(); ++j)
            if (group[i] != group[j]) acc += std::norm(rho_eb(i, j));
    return acc;
}

double variance(const DensityMatrix& rho, const HermitianObservable& b) {
    if (rho.dim() != b.dim())
        throw std::invalid_argument("variance: dimension mismatch");
    const double mean =
        real_checked(trace_product(rho.mat(), b.mat()), "variance mean");
    const double second = real_checked(
        trace_product(rho.mat(), b.mat() * b.mat()), "variance second moment");
    return second - mean * mean;
}

QubitVarianceSplit qubit_variance_decomposition(const DensityMatrix& rho,
                                                const HermitianObservable& b) {
    if (rho.dim() != 2 || b.dim() != 2)
        throw std::invalid_argument(
            "qubit_variance_decomposition: requires dimension 2");
    const auto& w = b.eig().eigenvalues;
    if (degenerate_groups(w).back() != 1)
        throw std::invalid_argument(
            "qubit_variance_decomposition: observable is degenerate");
    const double gap = w[1] - w[0];
    QubitVarianceSplit split{};
    split.mixedness = mixedness(rho);
    split.coherence = coherence_2norm(rho, b);
    split.normalized_variance = 2.0 * variance(rho, b) / (gap * gap);
    return split;
}

}  // namespace onset
