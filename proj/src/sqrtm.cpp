#include "loewner/sqrtm.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "loewner/lu.hpp"

namespace loewner {

namespace {

double spectral_from_sorted(const std::vector<double>& lambdas) {
    return std::max(std::abs(lambdas.front()), std::abs(lambdas.back()));
}

EigenPair most_negative_pair(const EigenDecomposition& d) {
    const int n = d.u.dim();
    EigenPair pair;
    pair.value = d.lambdas.back();
    pair.vector.resize(n);
    for (int i = 0; i < n; ++i) pair.vector[i] = d.u(i, n - 1);
    return pair;
}

void require_psd_spectrum(const EigenDecomposition& d, double tau_psd,
                          const char* who) {
    const double floor = -tau_psd * spectral_from_sorted(d.lambdas);
    if (d.lambdas.back() < floor) {
        throw NotPsd(std::string(who) + ": minimum eigenvalue " +
                         std::to_string(d.lambdas.back()) +
                         " is below the PSD floor " + std::to_string(floor),
                     most_negative_pair(d));
    }
}

/// U diag(values) U* with the upper triangle computed once and mirrored,
/// so the result is Hermitian bit-for-bit.
ComplexMatrix recompose(const ComplexMatrix& u, const std::vector<double>& values) {
    const int n = u.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Complex sum(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                sum += u(i, k) * values[k] * std::conj(u(j, k));
            if (i == j) {
                out(i, i) = Complex(sum.real(), 0.0);
            } else {
                out(i, j) = sum;
                out(j, i) = std::conj(sum);
            }
        }
    }
    return out;
}

/// Entrywise (M + M*)/2; exactly Hermitian by construction.
ComplexMatrix hermitian_average(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        out(i, i) = Complex(m(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex sum = m(i, j) + std::conj(m(j, i));
            out(i, j) = Complex(sum.real() / 2.0, sum.imag() / 2.0);
            out(j, i) = std::conj(out(i, j));
        }
    }
    return out;
}

} // namespace

SqrtResult psd_sqrt(const HermitianMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    const EigenDecomposition d = eigh(a, cfg);
    require_psd_spectrum(d, cfg.psd, "psd_sqrt");

    const int n = a.dim();
    double clipped = 0.0;
    std::vector<double> roots(n);
    for (int i = 0; i < n; ++i) {
        if (d.lambdas[i] < 0.0) {
            clipped += -d.lambdas[i];
            roots[i] = 0.0;
        } else {
            roots[i] = std::sqrt(d.lambdas[i]);
        }
    }
    return {HermitianMatrix(recompose(d.u, roots), cfg.hermitian), clipped};
}

double denman_beavers_shift(const HermitianMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    const EigenDecomposition d = eigh(a, cfg);
    const double delta = kShiftEpsilon * std::max(1.0, spectral_from_sorted(d.lambdas));
    return d.lambdas.back() < delta ? delta : 0.0;
}

HermitianMatrix denman_beavers_sqrt(const HermitianMatrix& a,
                                    const ToleranceConfig& cfg) {
    cfg.validate();
    const EigenDecomposition d = eigh(a, cfg);
    require_psd_spectrum(d, cfg.psd, "denman_beavers_sqrt");

    const int n = a.dim();
    const double delta =
        kShiftEpsilon * std::max(1.0, spectral_from_sorted(d.lambdas));
    ComplexMatrix y = a.matrix();
    if (d.lambdas.back() < delta) {
        for (int i = 0; i < n; ++i) y(i, i) += delta;
    }
    ComplexMatrix z = ComplexMatrix::identity(n);

    const int cap = cfg.max_sweeps * 4;
    // The step norm stagnates near n*eps*cond(Y) once rounding dominates, so
    // a step that stopped shrinking while already small is also accepted.
    const double stagnation_floor = std::sqrt(cfg.convergence);
    double previous_step = -1.0;
    for (int iteration = 0; iteration < cap; ++iteration) {
        ComplexMatrix y_inv(n);
        ComplexMatrix z_inv(n);
        try {
            y_inv = inverse(y);
            z_inv = inverse(z);
        } catch (const SingularMatrix& e) {
            throw SingularIteration(
                std::string("square-root iterate became singular: ") + e.what());
        }
        ComplexMatrix y_next = hermitian_average(0.5 * (y + z_inv));
        ComplexMatrix z_next = hermitian_average(0.5 * (z + y_inv));
        const double step = (y_next - y).frobenius_norm();
        const double scale = y.frobenius_norm();
        y = std::move(y_next);
        z = std::move(z_next);
        if (step <= cfg.convergence * scale) {
            return HermitianMatrix(std::move(y), cfg.hermitian);
        }
        if (previous_step >= 0.0 && step >= previous_step &&
            step <= stagnation_floor * scale) {
            return HermitianMatrix(std::move(y), cfg.hermitian);
        }
        previous_step = step;
    }
    throw NonConvergence("square-root iteration step still " +
                             std::to_string(previous_step) + " after " +
                             std::to_string(cap) + " iterations",
                         previous_step);
}

double sqrt_commutes(const HermitianMatrix& a, const ComplexMatrix& b,
                     const ToleranceConfig& cfg) {
    cfg.validate();
    const double comm = commutator_norm(a.matrix(), b);
    const double bound =
        cfg.equality * std::max(1.0, a.frobenius_norm() * b.frobenius_norm());
    if (comm > bound) {
        throw NotCommuting("commutator norm " + std::to_string(comm) +
                               " exceeds bound " + std::to_string(bound),
                           comm, bound);
    }

    // One unitary diagonalizes A together with each Hermitian part of B;
    // in that basis the square root is diagonal too, which is the structural
    // reason the commutator below comes out small.
    const auto parts = cartesian_parts(b, cfg);
    sim_diag_commuting(a, parts.first, cfg);
    sim_diag_commuting(a, parts.second, cfg);

    const SqrtResult root = psd_sqrt(a, cfg);
    return commutator_norm(b, root.root.matrix());
}

} // namespace loewner
