#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "onset/eig.hpp"
#include "onset/kernels.hpp"
#include "onset/matrix.hpp"
#include "onset/ops.hpp"
#include "onset/rng.hpp"
#include "onset/states.hpp"

using namespace onset;

namespace {

ComplexMatrix random_matrix(Rng& rng, std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < m.size(); ++i) {
        m.data()[i] = cplx(rng.normal(), rng.normal());
    }
    return m;
}

}  // namespace

TEST_CASE("identity and diagonal factories") {
    const auto id = ComplexMatrix::identity(3);
    CHECK(id(0, 0) == cplx(1.0));
    CHECK(id(0, 1) == cplx(0.0));
    const auto d = ComplexMatrix::diagonal({1.0, -2.0});
    CHECK(d(1, 1) == cplx(-2.0));
    CHECK(d(0, 1) == cplx(0.0));
    CHECK_THROWS_AS(ComplexMatrix(0), std::invalid_argument);
}

TEST_CASE("matrix product against hand computation") {
    ComplexMatrix a(2);
    a(0, 0) = {1, 1};
    a(0, 1) = {0, 2};
    a(1, 0) = {3, 0};
    a(1, 1) = {0, -1};
    ComplexMatrix b(2);
    b(0, 0) = {0, 1};
    b(0, 1) = {2, 0};
    b(1, 0) = {1, 0};
    b(1, 1) = {1, 1};
    const auto c = a * b;
    CHECK(std::abs(c(0, 0) - cplx(-1, 3)) < 1e-15);
    CHECK(std::abs(c(0, 1) - cplx(0, 4)) < 1e-15);
    CHECK(std::abs(c(1, 0) - cplx(0, 2)) < 1e-15);
    CHECK(std::abs(c(1, 1) - cplx(7, -1)) < 1e-15);
}

TEST_CASE("multiply_dagger matches explicit dagger product") {
    Rng rng(11);
    for (std::size_t dim : {2u, 5u, 9u}) {
        const auto a = random_matrix(rng, dim);
        const auto b = random_matrix(rng, dim);
        CHECK(max_abs_diff(multiply_dagger(a, b), a * dagger(b)) < 1e-13);
    }
}

TEST_CASE("pauli commutators") {
    const auto x = ops::pauli_x();
    const auto y = ops::pauli_y();
    const auto z = ops::pauli_z();
    CHECK(max_abs_diff(commutator(x, y), z * cplx(0.0, 2.0)) < 1e-15);
    CHECK(max_abs_diff(commutator(y, z), x * cplx(0.0, 2.0)) < 1e-15);
    CHECK(max_abs_diff(commutator(z, x), y * cplx(0.0, 2.0)) < 1e-15);
    CHECK(std::abs(trace(x * x) - cplx(2.0)) < 1e-15);
}

TEST_CASE("kron layout: first factor is the slow index") {
    const auto z = ops::pauli_z();
    const auto id = ComplexMatrix::identity(2);
    const auto k = kron(z, id);
    CHECK(k(0, 0) == cplx(1.0));
    CHECK(k(1, 1) == cplx(1.0));
    CHECK(k(2, 2) == cplx(-1.0));
    CHECK(k(3, 3) == cplx(-1.0));
    const auto k2 = kron(id, z);
    CHECK(k2(1, 1) == cplx(-1.0));
    CHECK(k2(2, 2) == cplx(1.0));
}

TEST_CASE("kron of products equals product of krons") {
    Rng rng(7);
    const auto a1 = random_matrix(rng, 3);
    const auto a2 = random_matrix(rng, 3);
    const auto b1 = random_matrix(rng, 2);
    const auto b2 = random_matrix(rng, 2);
    CHECK(max_abs_diff(kron(a1 * a2, b1 * b2), kron(a1, b1) * kron(a2, b2)) <
          1e-12);
}

TEST_CASE("partial trace of a Bell state gives the maximally mixed qubit") {
    const cplx h = 1.0 / std::sqrt(2.0);
    const auto bell = pure_state(std::vector<cplx>{h, 0.0, 0.0, h});
    for (auto side : {Factor::slow, Factor::fast}) {
        const auto red = partial_trace(bell.mat(), 2, 2, side);
        CHECK(max_abs_diff(red, ComplexMatrix::identity(2) * cplx(0.5)) <
              1e-15);
    }
}

TEST_CASE("partial trace of a product factorizes") {
    Rng rng(23);
    const auto rho_a = random_density(2, 231);
    const auto rho_b = random_density(3, 232);
    const auto joint = kron(rho_a.mat(), rho_b.mat());
    CHECK(max_abs_diff(partial_trace(joint, 2, 3, Factor::fast), rho_a.mat()) <
          1e-13);
    CHECK(max_abs_diff(partial_trace(joint, 2, 3, Factor::slow), rho_b.mat()) <
          1e-13);
    CHECK(std::abs(trace(partial_trace(joint, 2, 3, Factor::slow)) - cplx(1.0)) <
          1e-13);
}

TEST_CASE("trace_product equals trace of the product") {
    Rng rng(5);
    const auto a = random_matrix(rng, 6);
    const auto b = random_matrix(rng, 6);
    CHECK(std::abs(trace_product(a, b) - trace(a * b)) < 1e-12);
}

TEST_CASE("hermitian eigensolver on known matrices") {
    const auto ex = herm_eig(ops::pauli_x());
    CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ex.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    const auto ez = herm_eig(ops::pauli_z());
    CHECK(ez.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));

    ComplexMatrix skew(2);
    skew(0, 1) = {0.0, 1.0};
    skew(1, 0) = {0.0, 1.0};
    CHECK_THROWS_AS(herm_eig(skew), std::invalid_argument);
}

TEST_CASE("eigendecomposition reconstructs the matrix") {
    Rng rng(31);
    for (std::size_t dim : {2u, 5u, 16u}) {
        const auto h = random_hermitian(dim, 310 + dim);
        const auto eig = herm_eig(h);
        ComplexMatrix lambda(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            lambda(i, i) = eig.eigenvalues[i];
        }
        const auto rebuilt =
            eig.eigenvectors * lambda * dagger(eig.eigenvectors);
        CHECK(max_abs_diff(rebuilt, h) < 1e-10);
        for (std::size_t i = 1; i < dim; ++i) {
            CHECK(eig.eigenvalues[i - 1] <= eig.eigenvalues[i]);
        }
    }
}

TEST_CASE("matrix_fn of the exponential is unitary") {
    Rng rng(41);
    const auto h = random_hermitian(6, 411);
    const auto u = matrix_fn(h, [](double x) {
        return std::exp(cplx(0.0, x));
    });
    CHECK(max_abs_diff(multiply_dagger(u, u), ComplexMatrix::identity(6)) <
          1e-12);
}

TEST_CASE("density matrix spectra live in [0, 1]") {
    Rng rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const auto rho = random_density(2 + trial % 7, 530 + trial);
        const auto vals = herm_eigvals(rho.mat());
        for (double v : vals) {
            CHECK(v >= -1e-10);
            CHECK(v <= 1.0 + 1e-10);
        }
    }
}

TEST_CASE("parallel kernels agree bitwise with the serial reference") {
    Rng rng(97);
    const std::size_t n = 64;
    const auto a = random_matrix(rng, n);
    const auto b = random_matrix(rng, n);

    ComplexMatrix par(n), ser(n);
    kernels::matmul(a.data(), b.data(), par.data(), n);
    kernels::serial::matmul(a.data(), b.data(), ser.data(), n);
    CHECK(std::memcmp(par.data(), ser.data(), n * n * sizeof(cplx)) == 0);

    kernels::matmul_dagger(a.data(), b.data(), par.data(), n);
    kernels::serial::matmul_dagger(a.data(), b.data(), ser.data(), n);
    CHECK(std::memcmp(par.data(), ser.data(), n * n * sizeof(cplx)) == 0);

    const auto a4 = random_matrix(rng, 4);
    const auto b16 = random_matrix(rng, 16);
    ComplexMatrix kp(64), ks(64);
    kernels::kron(a4.data(), 4, b16.data(), 16, kp.data());
    kernels::serial::kron(a4.data(), 4, b16.data(), 16, ks.data());
    CHECK(std::memcmp(kp.data(), ks.data(), 64 * 64 * sizeof(cplx)) == 0);

    ComplexMatrix ps(16), pp(16);
    kernels::partial_trace_slow(a.data(), 4, 16, pp.data());
    kernels::serial::partial_trace_slow(a.data(), 4, 16, ps.data());
    CHECK(std::memcmp(pp.data(), ps.data(), 16 * 16 * sizeof(cplx)) == 0);

    ComplexMatrix fs(4), fp(4);
    kernels::partial_trace_fast(a.data(), 4, 16, fp.data());
    kernels::serial::partial_trace_fast(a.data(), 4, 16, fs.data());
    CHECK(std::memcmp(fp.data(), fs.data(), 4 * 4 * sizeof(cplx)) == 0);

    std::vector<double> lam(n);
    for (std::size_t i = 0; i < n; ++i) {
        lam[i] = rng.normal();
    }
    kernels::phase_conjugate(a.data(), lam.data(), 0.37, par.data(), n);
    kernels::serial::phase_conjugate(a.data(), lam.data(), 0.37, ser.data(), n);
    CHECK(std::memcmp(par.data(), ser.data(), n * n * sizeof(cplx)) == 0);
}

TEST_CASE("dimension mismatches are rejected") {
    const auto a = ComplexMatrix::identity(2);
    const auto b = ComplexMatrix::identity(3);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(commutator(a, b), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(6), 2, 2,
                                  Factor::slow),
                    std::invalid_argument);
}
