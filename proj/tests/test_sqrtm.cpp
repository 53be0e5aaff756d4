#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "loewner/complex_matrix.hpp"
#include "loewner/eigen.hpp"
#include "loewner/errors.hpp"
#include "loewner/hermitian_matrix.hpp"
#include "loewner/oracles.hpp"
#include "loewner/sqrtm.hpp"

using namespace loewner;

namespace {

HermitianMatrix herm2(Complex a00, Complex a01, Complex a11) {
    return HermitianMatrix(ComplexMatrix(2, {a00, a01, std::conj(a01), a11}));
}

HermitianMatrix diag2(double a, double b) {
    ComplexMatrix m(2);
    m(0, 0) = Complex(a, 0);
    m(1, 1) = Complex(b, 0);
    return HermitianMatrix(m);
}

} // namespace

TEST_SUITE("sqrtm") {

TEST_CASE("2x2 root in closed form") {
    // sqrt([[2,1],[1,2]]) = [[(r+1)/2, (r-1)/2], [(r-1)/2, (r+1)/2]] with
    // r = sqrt(3): eigenvalues 3 and 1 on eigenvectors (1,1), (1,-1).
    const SqrtResult r = psd_sqrt(herm2(Complex(2, 0), Complex(1, 0), Complex(2, 0)));
    const double root3 = std::sqrt(3.0);
    CHECK(r.root(0, 0).real() == doctest::Approx((root3 + 1) / 2).epsilon(1e-12));
    CHECK(r.root(0, 1).real() == doctest::Approx((root3 - 1) / 2).epsilon(1e-12));
    CHECK(r.root(1, 0).real() == doctest::Approx((root3 - 1) / 2).epsilon(1e-12));
    CHECK(r.root(1, 1).real() == doctest::Approx((root3 + 1) / 2).epsilon(1e-12));
    CHECK(r.clipped_mass == 0.0);
}

TEST_CASE("complex 2x2 root in closed form") {
    // sqrt([[2,i],[-i,2]]) = [[(r+1)/2, i(r-1)/2], [-i(r-1)/2, (r+1)/2]],
    // r = sqrt(3); squaring gives diagonal 2 and off-diagonal i back.
    const SqrtResult r = psd_sqrt(herm2(Complex(2, 0), Complex(0, 1), Complex(2, 0)));
    const double root3 = std::sqrt(3.0);
    CHECK(r.root(0, 0).real() == doctest::Approx((root3 + 1) / 2).epsilon(1e-12));
    CHECK(r.root(0, 0).imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.root(0, 1).imag() == doctest::Approx((root3 - 1) / 2).epsilon(1e-12));
    CHECK(r.root(0, 1).real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.root(1, 0).imag() == doctest::Approx(-(root3 - 1) / 2).epsilon(1e-12));
}

TEST_CASE("identity and zero are fixed points") {
    const SqrtResult id = psd_sqrt(HermitianMatrix(ComplexMatrix::identity(3)));
    CHECK(matrix_equal(id.root.matrix(), ComplexMatrix::identity(3), 1e-14));
    const SqrtResult zero = psd_sqrt(HermitianMatrix(ComplexMatrix(3)));
    CHECK(zero.root.frobenius_norm() == 0.0);
    CHECK(zero.clipped_mass == 0.0);
}

TEST_CASE("scaling covariance: sqrt(cA) = sqrt(c) sqrt(A)") {
    const ToleranceConfig cfg;
    const HermitianMatrix a = gen_psd({0x5CA1E, 5});
    const ComplexMatrix lhs = psd_sqrt(4.0 * a).root.matrix();
    const ComplexMatrix rhs = 2.0 * psd_sqrt(a).root.matrix();
    CHECK(matrix_equal(lhs, rhs, 10 * cfg.equality));
}

TEST_CASE("root spectrum is the elementwise square root") {
    const HermitianMatrix a = gen_psd({0x57EC, 6});
    const auto da = eigh(a);
    const auto dr = eigh(psd_sqrt(a).root);
    for (std::size_t i = 0; i < da.lambdas.size(); ++i) {
        CHECK(dr.lambdas[i] ==
              doctest::Approx(std::sqrt(std::max(0.0, da.lambdas[i]))).epsilon(1e-9));
    }
}

TEST_CASE("squaring residual meets the contract on seeded inputs") {
    const ToleranceConfig cfg;
    for (int i = 0; i < 20; ++i) {
        const int n = 2 + (i % 9);
        const HermitianMatrix a = gen_psd({mix_seed(0x900D, i), n});
        const SqrtResult r = psd_sqrt(a);
        const double residual =
            (r.root.matrix() * r.root.matrix() - a.matrix()).frobenius_norm();
        CHECK(residual <= 100 * cfg.equality * std::max(1.0, a.frobenius_norm()));
        CHECK(r.clipped_mass >= 0.0);
        CHECK(r.clipped_mass <= cfg.psd * spectral_norm(a));
        CHECK(eigh(r.root).lambdas.back() >= 0.0);
    }
}

TEST_CASE("indefinite input is rejected with the most negative eigenpair") {
    CHECK_THROWS_AS(psd_sqrt(diag2(-1, 1)), NotPsd);
    try {
        psd_sqrt(diag2(-1, 1));
    } catch (const NotPsd& e) {
        CHECK(e.witness.value == doctest::Approx(-1.0).epsilon(1e-13));
        CHECK(std::abs(e.witness.vector[0]) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(std::abs(e.witness.vector[1]) == doctest::Approx(0.0).epsilon(1e-13));
    }
}

TEST_CASE("iterative root without shift on well-conditioned input") {
    CHECK(denman_beavers_shift(diag2(1, 4)) == 0.0);
    const HermitianMatrix y = denman_beavers_sqrt(diag2(1, 4));
    CHECK(y(0, 0).real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(y(1, 1).real() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(std::abs(y(0, 1)) < 1e-10);

    const HermitianMatrix four = denman_beavers_sqrt(
        HermitianMatrix(Complex(4, 0) * ComplexMatrix::identity(3)));
    CHECK(matrix_equal(four.matrix(), 2.0 * ComplexMatrix::identity(3), 1e-10));
}

TEST_CASE("iterative root shifts singular input onto the invertible cone") {
    const HermitianMatrix a = diag2(1, 0);
    // The input is exactly diagonal, so the eigensolver sees lambda_min = 0
    // below the shift threshold and the spectral norm is exactly 1.
    const double shift = denman_beavers_shift(a);
    CHECK(shift == 1e-10);

    // sqrt(diag(1,0) + shift I) = diag(sqrt(1+shift), sqrt(shift)).
    const HermitianMatrix y = denman_beavers_sqrt(a);
    CHECK(y(0, 0).real() == doctest::Approx(std::sqrt(1.0 + shift)).epsilon(1e-8));
    CHECK(y(1, 1).real() == doctest::Approx(std::sqrt(shift)).epsilon(1e-6));
}

TEST_CASE("the two square-root constructions agree") {
    const ToleranceConfig cfg;
    for (int i = 0; i < 10; ++i) {
        const int n = 2 + (i % 5);
        // Keep the spectrum bounded away from zero so no shift is needed.
        const HermitianMatrix base = gen_psd({mix_seed(0xD0B5, i), n});
        const HermitianMatrix a =
            base + HermitianMatrix(Complex(0.5, 0) * ComplexMatrix::identity(n));
        CHECK(denman_beavers_shift(a) == 0.0);
        const HermitianMatrix iterative = denman_beavers_sqrt(a);
        const HermitianMatrix spectral = psd_sqrt(a).root;
        CHECK(matrix_equal(iterative.matrix(), spectral.matrix(), 100 * cfg.equality));
    }
}

TEST_CASE("iterative root rejects indefinite input before iterating") {
    CHECK_THROWS_AS(denman_beavers_sqrt(diag2(-2, 1)), NotPsd);
}

TEST_CASE("square root preserves commutation") {
    const ToleranceConfig cfg;
    const auto [a, b] = gen_commuting_pair({0xC0117, 4});
    const double defect = sqrt_commutes(a, b);
    const double scale =
        std::max(1.0, std::sqrt(a.frobenius_norm()) * b.frobenius_norm());
    CHECK(defect <= 100 * cfg.equality * scale);

    // Integer example: diag(1,4) commutes with [[5,0],[0,7]] but also with
    // any polynomial in itself.
    const ComplexMatrix poly =
        diag2(1, 4).matrix() * diag2(1, 4).matrix() + ComplexMatrix::identity(2);
    CHECK(sqrt_commutes(diag2(1, 4), poly) <= 100 * cfg.equality);
}

TEST_CASE("noncommuting partner is rejected") {
    ComplexMatrix b(2);
    b(0, 1) = Complex(1, 0);
    CHECK_THROWS_AS(sqrt_commutes(diag2(1, 2), b), NotCommuting);
}

} // TEST_SUITE
