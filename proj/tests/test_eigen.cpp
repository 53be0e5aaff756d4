#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "doctest.h"

#include "loewner/complex_matrix.hpp"
#include "loewner/eigen.hpp"
#include "loewner/errors.hpp"
#include "loewner/hermitian_matrix.hpp"
#include "loewner/oracles.hpp"

using namespace loewner;

namespace {

HermitianMatrix herm2(Complex a00, Complex a01, Complex a11) {
    return HermitianMatrix(ComplexMatrix(2, {a00, a01, std::conj(a01), a11}));
}

double off_diagonal_mass(const ComplexMatrix& m) {
    double sum = 0.0;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (i != j) sum += std::norm(m(i, j));
        }
    }
    return std::sqrt(sum);
}

ComplexMatrix recompose(const EigenDecomposition& d) {
    const int n = d.u.dim();
    ComplexMatrix lam(n);
    for (int i = 0; i < n; ++i) lam(i, i) = d.lambdas[i];
    return d.u * lam * d.u.adjoint();
}

} // namespace

TEST_SUITE("eigen") {

TEST_CASE("already-diagonal input is returned exactly") {
    const auto d = eigh(herm2(Complex(3, 0), {}, Complex(1, 0)));
    REQUIRE(d.lambdas.size() == 2);
    CHECK(d.lambdas[0] == 3.0);
    CHECK(d.lambdas[1] == 1.0);
    CHECK(d.u(0, 0) == Complex(1, 0));
    CHECK(d.u(1, 1) == Complex(1, 0));
    CHECK(d.u(0, 1) == Complex(0, 0));
}

TEST_CASE("symmetric exchange matrix: lambda^2 = 1") {
    const auto d = eigh(herm2({}, Complex(1, 0), {}));
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(d.lambdas[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.lambdas[1] == doctest::Approx(-1.0).epsilon(1e-14));
    // Phase normalization pins the sign: first components real positive.
    CHECK(d.u(0, 0).real() == doctest::Approx(s).epsilon(1e-14));
    CHECK(d.u(1, 0).real() == doctest::Approx(s).epsilon(1e-14));
    CHECK(d.u(0, 1).real() == doctest::Approx(s).epsilon(1e-14));
    CHECK(d.u(1, 1).real() == doctest::Approx(-s).epsilon(1e-14));
    CHECK(d.u(0, 0).imag() == 0.0);
}

TEST_CASE("characteristic polynomial lambda^2 - 4 lambda + 3") {
    const auto d = eigh(herm2(Complex(2, 0), Complex(1, 0), Complex(2, 0)));
    CHECK(d.lambdas[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(d.lambdas[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("complex entries: [[2,i],[-i,2]] has spectrum (3,1)") {
    const auto d = eigh(herm2(Complex(2, 0), Complex(0, 1), Complex(2, 0)));
    CHECK(d.lambdas[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(d.lambdas[1] == doctest::Approx(1.0).epsilon(1e-14));
    const HermitianMatrix a = herm2(Complex(2, 0), Complex(0, 1), Complex(2, 0));
    CHECK(matrix_equal(recompose(d), a.matrix(), 1e-13));
}

TEST_CASE("decomposition invariants on seeded dense matrices") {
    const ToleranceConfig cfg;
    for (int i = 0; i < 25; ++i) {
        const int n = 2 + (i % 9);
        SplitMix64 rng(mix_seed(0xE16E5EEDULL, static_cast<std::uint64_t>(i)));
        ComplexMatrix m(n);
        for (int r = 0; r < n; ++r) {
            m(r, r) = Complex(3.0 * rng.pseudo_normal(), 0);
            for (int c = r + 1; c < n; ++c) {
                m(r, c) = Complex(rng.pseudo_normal(), rng.pseudo_normal());
                m(c, r) = std::conj(m(r, c));
            }
        }
        const HermitianMatrix a(m);
        const auto d = eigh(a);

        CHECK(std::is_sorted(d.lambdas.rbegin(), d.lambdas.rend()));
        const double scale = std::max(1.0, a.frobenius_norm());
        CHECK((recompose(d) - a.matrix()).frobenius_norm() <= 10 * cfg.equality * scale);
        CHECK((d.u.adjoint() * d.u - ComplexMatrix::identity(n)).frobenius_norm() <=
              10 * cfg.equality * n);
        CHECK(off_diagonal_mass(d.u.adjoint() * a.matrix() * d.u) <=
              cfg.convergence * a.frobenius_norm());

        // Similarity invariants: trace and Frobenius norm survive.
        double lam_sum = 0.0;
        double lam_sq = 0.0;
        for (double lam : d.lambdas) {
            lam_sum += lam;
            lam_sq += lam * lam;
        }
        CHECK(std::abs(lam_sum - a.trace_real()) <=
              cfg.equality * std::max(1.0, std::abs(a.trace_real())));
        const double fsq = a.frobenius_norm() * a.frobenius_norm();
        CHECK(std::abs(lam_sq - fsq) <= cfg.equality * std::max(1.0, fsq));

        // Column phases: the first component of largest modulus is real
        // and nonnegative.
        for (int c = 0; c < n; ++c) {
            double best = -1.0;
            int best_row = 0;
            for (int r = 0; r < n; ++r) {
                if (std::abs(d.u(r, c)) > best + 1e-12) {
                    best = std::abs(d.u(r, c));
                    best_row = r;
                }
            }
            CHECK(d.u(best_row, c).imag() == 0.0);
            CHECK(d.u(best_row, c).real() >= 0.0);
        }
    }
}

TEST_CASE("sweep cap produces NonConvergence with the residual attached") {
    const HermitianMatrix a = gen_psd({0xCAFE, 8});
    ToleranceConfig strict;
    strict.max_sweeps = 1;
    CHECK_THROWS_AS(eigh(a, strict), NonConvergence);
    try {
        eigh(a, strict);
    } catch (const NonConvergence& e) {
        CHECK(e.residual > 0.0);
    }
}

TEST_CASE("spectral norm is the largest absolute eigenvalue") {
    ComplexMatrix m(2);
    m(0, 0) = Complex(3, 0);
    m(1, 1) = Complex(-4, 0);
    CHECK(spectral_norm(HermitianMatrix(m)) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(spectral_norm(HermitianMatrix(ComplexMatrix(2))) == 0.0);
}

TEST_CASE("simultaneous diagonalization splits a degenerate eigenspace") {
    // A = diag(1,1,2); H couples the two lambda=1 coordinates and is 5 on
    // the third. Joint diagonal pairs must be (2,5), (1,1), (1,-1).
    ComplexMatrix am(3);
    am(0, 0) = Complex(1, 0);
    am(1, 1) = Complex(1, 0);
    am(2, 2) = Complex(2, 0);
    ComplexMatrix hm(3);
    hm(0, 1) = Complex(1, 0);
    hm(1, 0) = Complex(1, 0);
    hm(2, 2) = Complex(5, 0);
    const HermitianMatrix a(am);
    const HermitianMatrix h(hm);

    const SimDiagResult r = sim_diag_commuting(a, h);
    REQUIRE(r.a_diag.size() == 3);
    std::multiset<std::pair<double, double>> got;
    for (int i = 0; i < 3; ++i) {
        got.insert({std::round(r.a_diag[i] * 1e9) / 1e9, std::round(r.h_diag[i] * 1e9) / 1e9});
    }
    const std::multiset<std::pair<double, double>> want = {{2, 5}, {1, 1}, {1, -1}};
    CHECK(got == want);

    const ToleranceConfig cfg;
    const ComplexMatrix ua = r.u.adjoint() * a.matrix() * r.u;
    const ComplexMatrix uh = r.u.adjoint() * h.matrix() * r.u;
    CHECK(off_diagonal_mass(ua) <= 10 * cfg.equality * std::max(1.0, a.frobenius_norm()));
    CHECK(off_diagonal_mass(uh) <= 10 * cfg.equality * std::max(1.0, h.frobenius_norm()));

    // The joint basis keeps A's spectrum as a multiset.
    std::multiset<double> a_multiset(r.a_diag.begin(), r.a_diag.end());
    const auto plain = eigh(a);
    std::multiset<double> plain_multiset(plain.lambdas.begin(), plain.lambdas.end());
    CHECK(a_multiset == plain_multiset);
}

TEST_CASE("identity commutes with everything and inherits the partner basis") {
    const HermitianMatrix h = gen_psd({0xBEEF, 4});
    const HermitianMatrix id(ComplexMatrix::identity(4));
    const SimDiagResult r = sim_diag_commuting(id, h);
    const auto hd = eigh(h);
    CHECK(matrix_equal(r.u, hd.u, 1e-12));
    for (int i = 0; i < 4; ++i) {
        CHECK(r.a_diag[i] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(r.h_diag[i] == doctest::Approx(hd.lambdas[i]).epsilon(1e-10));
    }
}

TEST_CASE("self pair diagonalizes to equal diagonals") {
    const HermitianMatrix a = gen_psd({0xF00D, 5});
    const SimDiagResult r = sim_diag_commuting(a, a);
    for (int i = 0; i < 5; ++i) {
        CHECK(r.a_diag[i] == doctest::Approx(r.h_diag[i]).epsilon(1e-9));
    }
}

TEST_CASE("commuting pairs from the generator are jointly diagonalized") {
    const ToleranceConfig cfg;
    for (int i = 0; i < 10; ++i) {
        const auto [a, b] = gen_commuting_pair({mix_seed(0x51D14A6, i), 3 + (i % 6)});
        const auto [re, im] = cartesian_parts(b);
        const SimDiagResult r = sim_diag_commuting(a, re);
        const ComplexMatrix ua = r.u.adjoint() * a.matrix() * r.u;
        const ComplexMatrix ure = r.u.adjoint() * re.matrix() * r.u;
        CHECK(off_diagonal_mass(ua) <= 10 * cfg.equality * std::max(1.0, a.frobenius_norm()));
        CHECK(off_diagonal_mass(ure) <=
              10 * cfg.equality * std::max(1.0, re.frobenius_norm()));
    }
}

TEST_CASE("noncommuting input is rejected with the measured commutator") {
    ComplexMatrix am(2);
    am(0, 0) = Complex(1, 0);
    am(1, 1) = Complex(2, 0);
    const HermitianMatrix a(am);
    const HermitianMatrix h = herm2({}, Complex(1, 0), {});
    CHECK_THROWS_AS(sim_diag_commuting(a, h), NotCommuting);
    try {
        sim_diag_commuting(a, h);
    } catch (const NotCommuting& e) {
        CHECK(e.commutator == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
        CHECK(e.bound < e.commutator);
    }
}

TEST_CASE("one-dimensional input is trivial") {
    const HermitianMatrix a(ComplexMatrix(1, {Complex(7, 0)}));
    const auto d = eigh(a);
    CHECK(d.lambdas[0] == 7.0);
    CHECK(d.u(0, 0) == Complex(1, 0));
}

} // TEST_SUITE
