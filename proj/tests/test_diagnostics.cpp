#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "onset/diagnostics.hpp"
#include "onset/eig.hpp"
#include "onset/matrix.hpp"
#include "onset/ops.hpp"
#include "onset/states.hpp"

using namespace onset;

namespace {

DensityMatrix diag_state(std::initializer_list<double> populations) {
    return DensityMatrix::validated(ComplexMatrix::diagonal(populations));
}

}  // namespace

TEST_CASE("n-purity on known spectra") {
    const auto rho = diag_state({0.5, 0.3, 0.2});
    CHECK(n_purity(rho, 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(n_purity(rho, 3) == doctest::Approx(0.160).epsilon(1e-14));
    const auto mixed = diag_state({0.5, 0.5});
    CHECK(n_purity(mixed, 2) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(n_purity(rho, 0), std::invalid_argument);
}

TEST_CASE("purity and mixedness") {
    CHECK(mixedness(diag_state({1.0, 0.0})) == doctest::Approx(0.0));
    CHECK(mixedness(diag_state({0.5, 0.5})) == doctest::Approx(0.5));
    CHECK(mixedness(diag_state({0.7, 0.3})) ==
          doctest::Approx(0.42).epsilon(1e-14));
}

TEST_CASE("Renyi and von Neumann entropies") {
    const auto pure = diag_state({1.0, 0.0, 0.0});
    CHECK(renyi_entropy(pure, 2) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(renyi_entropy(pure, 5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(von_neumann_entropy(pure) == doctest::Approx(0.0).epsilon(1e-12));

    const auto mixed = diag_state({0.5, 0.5});
    CHECK(renyi_entropy(mixed, 2) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));

    const auto skew = diag_state({0.75, 0.25});
    const double expected = -0.75 * std::log(0.75) - 0.25 * std::log(0.25);
    CHECK(von_neumann_entropy(skew) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(expected == doctest::Approx(0.562335).epsilon(1e-6));

    CHECK_THROWS_AS(renyi_entropy(mixed, 1), std::invalid_argument);
}

TEST_CASE("Renyi entropies stay within [0, log d]") {
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dim = 2 + trial % 5;
        const auto rho = random_density(dim, 900 + trial);
        for (int n = 2; n <= 5; ++n) {
            const double h = renyi_entropy(rho, n);
            CHECK(h >= -1e-12);
            CHECK(h <= std::log(double(dim)) + 1e-12);
        }
    }
}

TEST_CASE("real-power entropy converges linearly to von Neumann") {
    const auto rho = random_density(6, 1234);
    const double vn = von_neumann_entropy(rho);
    double prev = 0.0;
    int step = 0;
    for (double eps : {1e-3, 1e-4, 1e-5}) {
        const double h = renyi_entropy_real(rho, 1.0 + eps);
        const double diff = std::abs(h - vn);
        if (step > 0) {
            CHECK(diff < prev);
            CHECK(prev / diff == doctest::Approx(10.0).epsilon(0.05));
        }
        prev = diff;
        ++step;
    }
    CHECK(prev < 1e-4);
}

TEST_CASE("coherence in the observable eigenbasis") {
    const HermitianObservable z(ops::pauli_z());

    CHECK(coherence_2norm(diag_state({0.3, 0.7}), z) ==
          doctest::Approx(0.0).epsilon(1e-14));

    ComplexMatrix m(2);
    m(0, 0) = 0.5;
    m(1, 1) = 0.5;
    m(0, 1) = 0.2;
    m(1, 0) = 0.2;
    CHECK(coherence_2norm(DensityMatrix::validated(m), z) ==
          doctest::Approx(0.08).epsilon(1e-12));

    const HermitianObservable x(ops::pauli_x());
    CHECK(coherence_2norm(DensityMatrix::validated(m), x) <
          0.08);
}

TEST_CASE("degenerate blocks do not count as coherence") {
    ComplexMatrix b = ComplexMatrix::diagonal({1.0, 1.0, 3.0});
    const HermitianObservable obs(b);

    ComplexMatrix m(3);
    m(0, 0) = 0.4;
    m(1, 1) = 0.4;
    m(2, 2) = 0.2;
    m(0, 1) = 0.1;
    m(1, 0) = 0.1;
    const auto rho = DensityMatrix::validated(m);
    CHECK(coherence_2norm(rho, obs) == doctest::Approx(0.0).epsilon(1e-12));

    ComplexMatrix m2 = m;
    m2(0, 2) = 0.05;
    m2(2, 0) = 0.05;
    CHECK(coherence_2norm(DensityMatrix::validated(m2), obs) ==
          doctest::Approx(2 * 0.05 * 0.05).epsilon(1e-10));
}

TEST_CASE("variance basics") {
    const HermitianObservable z(ops::pauli_z());
    CHECK(variance(diag_state({1.0, 0.0}), z) ==
          doctest::Approx(0.0).epsilon(1e-14));

    ComplexMatrix plus(2);
    plus(0, 0) = plus(0, 1) = plus(1, 0) = plus(1, 1) = 0.5;
    CHECK(variance(DensityMatrix::validated(plus), z) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("coherence and variance are basis covariant") {
    const auto rho = random_density(5, 5150);
    const auto b = random_hermitian(5, 5151);
    const HermitianObservable obs(b);

    const auto g = random_hermitian(5, 5152);
    const auto u = matrix_fn(g, [](double x) { return std::exp(cplx(0., x)); });
    const auto rho_u = DensityMatrix::trusted(conjugate_by(u, rho.mat()));
    const HermitianObservable obs_u(conjugate_by(u, b));

    CHECK(coherence_2norm(rho_u, obs_u) ==
          doctest::Approx(coherence_2norm(rho, obs)).epsilon(1e-10));
    CHECK(variance(rho_u, obs_u) ==
          doctest::Approx(variance(rho, obs)).epsilon(1e-10));
}

TEST_CASE("two-level variance decomposition") {
    const HermitianObservable z(ops::pauli_z());

    const auto zero = qubit_variance_decomposition(diag_state({1.0, 0.0}), z);
    CHECK(zero.normalized_variance == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(zero.mixedness == doctest::Approx(0.0));
    CHECK(zero.coherence == doctest::Approx(0.0));

    const auto mixed = qubit_variance_decomposition(diag_state({0.5, 0.5}), z);
    CHECK(mixed.normalized_variance == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mixed.mixedness == doctest::Approx(0.5));
    CHECK(mixed.coherence == doctest::Approx(0.0));

    ComplexMatrix plus(2);
    plus(0, 0) = plus(0, 1) = plus(1, 0) = plus(1, 1) = 0.5;
    const auto coh = qubit_variance_decomposition(
        DensityMatrix::validated(plus), z);
    CHECK(coh.normalized_variance == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(coh.mixedness == doctest::Approx(0.0));
    CHECK(coh.coherence == doctest::Approx(0.5).epsilon(1e-12));

    for (int trial = 0; trial < 200; ++trial) {
        const auto rho = random_density(2, 7000 + trial);
        const auto b = random_hermitian(2, 7500 + trial);
        const HermitianObservable obs(b);
        const auto split = qubit_variance_decomposition(rho, obs);
        CHECK(split.normalized_variance ==
              doctest::Approx(split.mixedness + split.coherence)
                  .epsilon(1e-10));
    }

    const HermitianObservable flat(ComplexMatrix::identity(2));
    CHECK_THROWS_AS(qubit_variance_decomposition(diag_state({0.5, 0.5}), flat),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        qubit_variance_decomposition(diag_state({0.5, 0.3, 0.2}),
                                     HermitianObservable(ops::pauli_z())),
        std::invalid_argument);
}

TEST_CASE("observable construction rejects non-hermitian input") {
    ComplexMatrix skew(2);
    skew(0, 1) = {0.0, 1.0};
    skew(1, 0) = {0.0, 1.0};
    CHECK_THROWS_AS(HermitianObservable{skew}, std::invalid_argument);
}
