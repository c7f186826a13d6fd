#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "petz/random_states.hpp"
#include "petz/spectral.hpp"
#include "test_helpers.hpp"

using namespace petz;
using test::diag;
using test::diag_state;

TEST_CASE("hermitian validation") {
    CMat bad(2, 2);
    bad(0, 1) = cplx(1.0, 0.0);
    bad(1, 0) = cplx(0.5, 0.0);
    CHECK_THROWS_AS((HermitianMatrix(bad)), NonHermitianError);

    CMat ok(2, 2);
    ok(0, 1) = cplx(0.0, 1.0);
    ok(1, 0) = cplx(0.0, -1.0);
    CHECK_NOTHROW((HermitianMatrix(ok)));
}

TEST_CASE("eigendecomposition of the identity") {
    const EigResult eig = eig_hermitian(HermitianMatrix(CMat::identity(3)));
    for (double v : eig.eigenvalues) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eig.eigenvectors.gram_residual(3) <= 1e-12);
}

TEST_CASE("eigendecomposition of a diagonal matrix") {
    const EigResult eig = eig_hermitian(HermitianMatrix(diag({2.0 / 3.0, 1.0 / 3.0})));
    CHECK(eig.eigenvalues[0] == 2.0 / 3.0);
    CHECK(eig.eigenvalues[1] == 1.0 / 3.0);
    CHECK(std::abs(eig.eigenvectors(0, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(eig.eigenvectors(1, 1)) == doctest::Approx(1.0));
}

TEST_CASE("eigendecomposition of an off-diagonal involution") {
    CMat x(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    const HermitianMatrix h(x);
    const EigResult eig = eig_hermitian(h);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(eig.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-13));
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(std::abs(eig.eigenvectors(i, k)) == doctest::Approx(r).epsilon(1e-12));
    // Residual contract.
    CMat hv = h.mat() * eig.eigenvectors;
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t i = 0; i < 2; ++i) hv(i, k) -= eig.eigenvalues[k] * eig.eigenvectors(i, k);
    CHECK(hv.frobenius_norm() <= 1e-11 * 2 * h.mat().frobenius_norm());
}

TEST_CASE("eigendecomposition round-trip on random matrices") {
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> gauss;
    for (std::size_t dim : {2, 3, 5, 8, 16}) {
        CMat h(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            h(i, i) = gauss(rng);
            for (std::size_t j = i + 1; j < dim; ++j) {
                h(i, j) = cplx(gauss(rng), gauss(rng));
                h(j, i) = std::conj(h(i, j));
            }
        }
        const EigResult eig = eig_hermitian(HermitianMatrix(h));
        CMat rebuilt(dim, dim);
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t i = 0; i < dim; ++i) {
                const cplx vi = eig.eigenvectors(i, k) * eig.eigenvalues[k];
                for (std::size_t j = 0; j < dim; ++j)
                    rebuilt(i, j) += vi * std::conj(eig.eigenvectors(j, k));
            }
        CHECK((rebuilt - h).frobenius_norm() <= 1e-10 * h.frobenius_norm());
        for (std::size_t k = 1; k < dim; ++k)
            CHECK(eig.eigenvalues[k - 1] >= eig.eigenvalues[k]);
    }
}

TEST_CASE("density_from_matrix basics") {
    const DensityState half = density_from_matrix(HermitianMatrix(diag({0.5, 0.5})));
    CHECK(half.eigenvalues()[0] == doctest::Approx(0.5));
    CHECK(half.eigenvalues()[1] == doctest::Approx(0.5));

    const DensityState thirds =
        density_from_matrix(HermitianMatrix(diag({2.0 / 3.0, 1.0 / 3.0})));
    CHECK(thirds.eigenvalues()[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    CHECK_THROWS_AS(density_from_matrix(HermitianMatrix(diag({1.0, -1e-3}))), NotPsdError);
    CHECK_THROWS_AS(density_from_matrix(HermitianMatrix(diag({0.7, 0.7}))), TraceNotOneError);
}

TEST_CASE("density state validation") {
    CHECK_THROWS_AS(DensityState({0.5, 0.4}, CMat::identity(2)), InvalidStateError);
    CHECK_THROWS_AS(DensityState({1.5, -0.5}, CMat::identity(2)), InvalidStateError);
    CMat skewed(2, 2);
    skewed(0, 0) = 1.0;
    skewed(0, 1) = 0.5;  // not orthonormal
    skewed(1, 1) = 1.0;
    CHECK_THROWS_AS(DensityState({0.5, 0.5}, std::move(skewed)), InvalidStateError);
    // Tiny negatives are clamped to zero.
    const DensityState s({1.0, -1e-13}, CMat::identity(2));
    CHECK(s.eigenvalues()[1] == 0.0);
}

TEST_CASE("support projector rank and clamping") {
    CHECK(support_projector(diag_state({0.5, 0.5})).rank == 2);

    const SupportProjector pure = support_projector(diag_state({1.0, 0.0}));
    CHECK(pure.rank == 1);
    CHECK(std::abs(pure.basis(0, 0)) == doctest::Approx(1.0));

    const DensityState nearly({1.0 - 1e-15, 1e-15}, CMat::identity(2));
    CHECK(support_projector(nearly, 1e-10).rank == 1);
}

TEST_CASE("matrix_power") {
    const DensityState s = diag_state({0.75, 0.25});
    const CMat same = matrix_power(s, 1.0, false);
    CHECK(same(0, 0).real() == doctest::Approx(0.75));
    CHECK(same(1, 1).real() == doctest::Approx(0.25));

    const CMat inv = matrix_power(diag_state({0.5, 0.5}), -1.0, true);
    CHECK(inv(0, 0).real() == doctest::Approx(2.0));
    CHECK(inv(1, 1).real() == doctest::Approx(2.0));

    // The pseudo-inverse annihilates the kernel.
    const CMat pinv = matrix_power(diag_state({1.0, 0.0}), -1.0, true);
    CHECK(pinv(0, 0).real() == doctest::Approx(1.0));
    CHECK(pinv(1, 1).real() == doctest::Approx(0.0));

    CHECK_THROWS_AS(matrix_power(diag_state({1.0, 0.0}), -1.0, false), SingularPowerError);

    // x^0 = 1 on the kernel without the pseudo flag, 0 with it.
    CHECK(matrix_power(diag_state({1.0, 0.0}), 0.0, false)(1, 1).real() ==
          doctest::Approx(1.0));
    CHECK(matrix_power(diag_state({1.0, 0.0}), 0.0, true)(1, 1).real() ==
          doctest::Approx(0.0));
}

TEST_CASE("matrix power additivity on the support") {
    std::mt19937_64 rng(99);
    StateGenOptions opts;
    opts.kernel_dim = 1;
    const DensityState s = random_density(rng, 5, opts);
    for (double a : {0.3, 0.5, 1.0, 2.0})
        for (double b : {0.3, 0.5, 1.0, 2.0}) {
            const CMat lhs = matrix_power(s, a, true) * matrix_power(s, b, true);
            const CMat rhs = matrix_power(s, a + b, true);
            CHECK((lhs - rhs).frobenius_norm() <= 1e-9);
        }
}

TEST_CASE("hs_norm_sq_diff") {
    const DensityState a = diag_state({2.0 / 3.0, 1.0 / 3.0});
    CHECK(hs_norm_sq_diff(a, a) == doctest::Approx(0.0).epsilon(1e-14));

    // Orthogonal pure states: tr(|0><0| - |1><1|)^2 = 2.
    CHECK(hs_norm_sq_diff(diag_state({1.0, 0.0}), diag_state({0.0, 1.0})) ==
          doctest::Approx(2.0));

    // Direct trace: tr(diag(1/6, -1/6)^2) = 2/36 = 1/18.
    CHECK(hs_norm_sq_diff(a, diag_state({0.5, 0.5})) == doctest::Approx(1.0 / 18.0));

    CHECK_THROWS_AS(hs_norm_sq_diff(a, diag_state({0.5, 0.25, 0.25})), DimMismatchError);
}

TEST_CASE("hs distance double sum equals entrywise trace") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 2 + rng() % 7;
        const DensityState rho = random_density(rng, dim);
        const DensityState sigma = random_density(rng, dim);
        const CMat d = rho.to_matrix() - sigma.to_matrix();
        const double entrywise = (d * d).trace().real();
        CHECK(std::abs(hs_norm_sq_diff(rho, sigma) - entrywise) <= 1e-10);
    }
}
