#include "loewner/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "loewner/lu.hpp"

namespace loewner {

namespace {

void require_psd_input(const HermitianMatrix& m, const ToleranceConfig& cfg,
                       const char* name) {
    OrderCertificate cert = is_psd(m, cfg);
    if (cert.verdict != Verdict::GEQ) {
        throw NotPsd(std::string("congruence_diag: ") + name +
                         " is not PSD, minimum eigenvalue " +
                         std::to_string(cert.min_eig),
                     std::move(*cert.witness));
    }
}

} // namespace

CongruenceResult congruence_diag(const HermitianMatrix& a, const HermitianMatrix& b,
                                 const ToleranceConfig& cfg) {
    cfg.validate();
    require_psd_input(a, cfg, "A");
    require_psd_input(b, cfg, "B");

    const int n = a.dim();
    const HermitianMatrix s = a + b;
    const EigenDecomposition es = eigh(s, cfg);
    const double s_norm =
        std::max(std::abs(es.lambdas.front()), std::abs(es.lambdas.back()));

    int range = 0;
    while (range < n && es.lambdas[range] > kRankThreshold * s_norm) ++range;

    // Whitened columns W = V_r Sigma_r^{-1/2}; kernel columns pass through.
    ComplexMatrix p(n);
    for (int j = 0; j < n; ++j) {
        const double scale = j < range ? 1.0 / std::sqrt(es.lambdas[j]) : 1.0;
        for (int i = 0; i < n; ++i) p(i, j) = scale * es.u(i, j);
    }

    std::vector<double> d1(n, 0.0);
    std::vector<double> d2(n, 0.0);
    if (range > 0) {
        // M = W*AW on the range; upper triangle mirrored so the block is
        // exactly Hermitian.
        std::vector<Vector> aw(range);
        for (int j = 0; j < range; ++j) {
            Vector col(n);
            for (int i = 0; i < n; ++i) col[i] = p(i, j);
            aw[j] = a.matrix() * col;
        }
        ComplexMatrix m(range);
        for (int i = 0; i < range; ++i) {
            for (int j = i; j < range; ++j) {
                Complex sum(0.0, 0.0);
                for (int k = 0; k < n; ++k) sum += std::conj(p(k, i)) * aw[j][k];
                if (i == j) {
                    m(i, i) = Complex(sum.real(), 0.0);
                } else {
                    m(i, j) = sum;
                    m(j, i) = std::conj(sum);
                }
            }
        }
        const EigenDecomposition em = eigh(HermitianMatrix(std::move(m), cfg.hermitian), cfg);
        std::vector<Vector> mixed(range, Vector(n));
        for (int j = 0; j < range; ++j)
            for (int i = 0; i < n; ++i) {
                Complex sum(0.0, 0.0);
                for (int k = 0; k < range; ++k) sum += p(i, k) * em.u(k, j);
                mixed[j][i] = sum;
            }
        for (int j = 0; j < range; ++j) {
            for (int i = 0; i < n; ++i) p(i, j) = mixed[j][i];
            d1[j] = em.lambdas[j];
            d2[j] = 1.0 - em.lambdas[j];
        }
    }

    // Deterministic column order: d1 descending, ties by d2 descending.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&d1, &d2](int i, int j) {
        if (d1[i] != d1[j]) return d1[i] > d1[j];
        return d2[i] > d2[j];
    });

    CongruenceResult result;
    result.p = ComplexMatrix(n);
    result.d1.resize(n);
    result.d2.resize(n);
    for (int j = 0; j < n; ++j) {
        result.d1[j] = d1[order[j]];
        result.d2[j] = d2[order[j]];
        for (int i = 0; i < n; ++i) result.p(i, j) = p(i, order[j]);
    }

    // cond(P) from the spectrum of P*P, also certifying invertibility.
    ComplexMatrix gram(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Complex sum(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                sum += std::conj(result.p(k, i)) * result.p(k, j);
            if (i == j) {
                gram(i, i) = Complex(sum.real(), 0.0);
            } else {
                gram(i, j) = sum;
                gram(j, i) = std::conj(sum);
            }
        }
    }
    const EigenDecomposition eg = eigh(HermitianMatrix(std::move(gram), cfg.hermitian), cfg);
    if (eg.lambdas.back() <= 0.0) {
        throw SingularP("congruence factor has a nonpositive Gram eigenvalue " +
                        std::to_string(eg.lambdas.back()));
    }
    result.cond_estimate = std::sqrt(eg.lambdas.front() / eg.lambdas.back());
    return result;
}

HermitianMatrix reconstruct(const CongruenceResult& result, Side which,
                            const ToleranceConfig& cfg) {
    cfg.validate();
    const std::vector<double>& d = which == Side::A ? result.d1 : result.d2;
    ComplexMatrix p_inv(result.p.dim());
    try {
        p_inv = inverse(result.p);
    } catch (const SingularMatrix& e) {
        throw SingularP(std::string("congruence factor is not invertible: ") +
                        e.what());
    }
    const int n = p_inv.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Complex sum(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                sum += std::conj(p_inv(k, i)) * d[k] * p_inv(k, j);
            if (i == j) {
                out(i, i) = Complex(sum.real(), 0.0);
            } else {
                out(i, j) = sum;
                out(j, i) = std::conj(sum);
            }
        }
    }
    return HermitianMatrix(std::move(out), cfg.hermitian);
}

bool order_via_diagonals(const CongruenceResult& result, const ToleranceConfig& cfg) {
    cfg.validate();
    double scale = 1.0;
    for (std::size_t i = 0; i < result.d1.size(); ++i)
        scale = std::max({scale, std::abs(result.d1[i]), std::abs(result.d2[i])});
    for (std::size_t i = 0; i < result.d1.size(); ++i)
        if (result.d1[i] < result.d2[i] - cfg.psd * scale) return false;
    return true;
}

} // namespace loewner
