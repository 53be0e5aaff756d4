#include "loewner/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace loewner {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    const int n = a.dim();
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

/// Zeroes a(p,q) with a unitary plane rotation and accumulates the same
/// rotation into the eigenvector columns of v. Requires |a(p,q)| > 0.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    const Complex e = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t =
        (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = a.dim();
    for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        const Complex new_pk = c * apk - s * (e * aqk);
        const Complex new_qk = s * (std::conj(e) * apk) + c * aqk;
        a(p, k) = new_pk;
        a(k, p) = std::conj(new_pk);
        a(q, k) = new_qk;
        a(k, q) = std::conj(new_qk);
    }
    a(p, p) = Complex(c * c * app - 2.0 * c * s * r + s * s * aqq, 0.0);
    a(q, q) = Complex(s * s * app + 2.0 * c * s * r + c * c * aqq, 0.0);
    a(p, q) = Complex(0.0, 0.0);
    a(q, p) = Complex(0.0, 0.0);

    for (int k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp - s * (std::conj(e) * vkq);
        v(k, q) = s * (e * vkp) + c * vkq;
    }
}

/// Multiplies column j by a unit phase making its first component of
/// largest modulus real and nonnegative.
void phase_normalize_column(ComplexMatrix& u, int j) {
    const int n = u.dim();
    int best = 0;
    double best_mod = std::abs(u(0, j));
    for (int i = 1; i < n; ++i) {
        const double m = std::abs(u(i, j));
        if (m > best_mod) {
            best_mod = m;
            best = i;
        }
    }
    if (best_mod == 0.0) return;
    const Complex phase = u(best, j) / best_mod;
    for (int i = 0; i < n; ++i) u(i, j) *= std::conj(phase);
    u(best, j) = Complex(best_mod, 0.0);
}

} // namespace

EigenDecomposition eigh(const HermitianMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    ComplexMatrix work = a.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    if (n > 1) {
        const double norm_f = work.frobenius_norm();
        const double target = cfg.convergence * norm_f;
        const double skip = target / (4.0 * n);
        bool converged = off_diagonal_norm(work) <= target;
        for (int sweep = 0; sweep < cfg.max_sweeps && !converged; ++sweep) {
            for (int p = 0; p < n - 1; ++p)
                for (int q = p + 1; q < n; ++q)
                    if (std::abs(work(p, q)) > skip) rotate(work, v, p, q);
            converged = off_diagonal_norm(work) <= target;
        }
        if (!converged) {
            const double off = off_diagonal_norm(work);
            throw NonConvergence(
                "Jacobi sweeps exhausted with off-diagonal mass " + std::to_string(off),
                off);
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&work](int i, int j) {
        return work(i, i).real() > work(j, j).real();
    });

    EigenDecomposition result;
    result.u = ComplexMatrix(n);
    result.lambdas.resize(n);
    for (int j = 0; j < n; ++j) {
        result.lambdas[j] = work(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) result.u(i, j) = v(i, order[j]);
        phase_normalize_column(result.u, j);
    }
    return result;
}

double spectral_norm(const HermitianMatrix& a, const ToleranceConfig& cfg) {
    const EigenDecomposition d = eigh(a, cfg);
    return std::max(std::abs(d.lambdas.front()), std::abs(d.lambdas.back()));
}

SimDiagResult sim_diag_commuting(const HermitianMatrix& a, const HermitianMatrix& h,
                                 const ToleranceConfig& cfg) {
    cfg.validate();
    const double comm = commutator_norm(a.matrix(), h.matrix());
    const double comm_bound =
        cfg.equality * std::max(1.0, a.frobenius_norm() * h.frobenius_norm());
    if (comm > comm_bound) {
        throw NotCommuting("commutator norm " + std::to_string(comm) +
                               " exceeds bound " + std::to_string(comm_bound),
                           comm, comm_bound);
    }

    const EigenDecomposition ea = eigh(a, cfg);
    const int n = a.dim();
    SimDiagResult result;
    result.u = ea.u;
    result.a_diag = ea.lambdas;
    result.h_diag.assign(n, 0.0);

    const double gap =
        kClusterGapFactor *
        std::max(std::abs(ea.lambdas.front()), std::abs(ea.lambdas.back()));

    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && ea.lambdas[end - 1] - ea.lambdas[end] <= gap) ++end;
        const int width = end - start;
        if (width > 1) {
            // Compress H to the cluster basis W (columns start..end-1 of U):
            // the upper triangle of W*HW is computed and mirrored so the
            // block is exactly Hermitian.
            std::vector<Vector> hw(width);
            for (int j = 0; j < width; ++j) {
                Vector col(n);
                for (int i = 0; i < n; ++i) col[i] = result.u(i, start + j);
                hw[j] = h.matrix() * col;
            }
            ComplexMatrix m(width);
            for (int i = 0; i < width; ++i) {
                for (int j = i; j < width; ++j) {
                    Complex sum(0.0, 0.0);
                    for (int k = 0; k < n; ++k)
                        sum += std::conj(result.u(k, start + i)) * hw[j][k];
                    m(i, j) = (i == j) ? Complex(sum.real(), 0.0) : sum;
                    if (i != j) m(j, i) = std::conj(sum);
                }
            }
            const EigenDecomposition em = eigh(HermitianMatrix(std::move(m)), cfg);
            std::vector<Vector> mixed(width, Vector(n));
            for (int j = 0; j < width; ++j)
                for (int i = 0; i < n; ++i) {
                    Complex sum(0.0, 0.0);
                    for (int k = 0; k < width; ++k)
                        sum += result.u(i, start + k) * em.u(k, j);
                    mixed[j][i] = sum;
                }
            for (int j = 0; j < width; ++j) {
                for (int i = 0; i < n; ++i) result.u(i, start + j) = mixed[j][i];
                phase_normalize_column(result.u, start + j);
            }
        }
        start = end;
    }

    for (int j = 0; j < n; ++j) {
        Vector col(n);
        for (int i = 0; i < n; ++i) col[i] = result.u(i, j);
        result.h_diag[j] = inner_product(h.matrix() * col, col).real();
    }
    return result;
}

} // namespace loewner
