#include "loewner/order.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace loewner {

namespace {

OrderCertificate certificate_from(const EigenDecomposition& d, double tau_psd) {
    const int n = d.u.dim();
    const double spectral =
        std::max(std::abs(d.lambdas.front()), std::abs(d.lambdas.back()));
    OrderCertificate cert;
    cert.min_eig = d.lambdas.back();
    if (cert.min_eig >= -tau_psd * std::max(1.0, spectral)) {
        cert.verdict = Verdict::GEQ;
    } else {
        cert.verdict = Verdict::NOT_GEQ;
        EigenPair witness;
        witness.value = cert.min_eig;
        witness.vector.resize(n);
        for (int i = 0; i < n; ++i) witness.vector[i] = d.u(i, n - 1);
        cert.witness = std::move(witness);
    }
    return cert;
}

void require_hypothesis(const HermitianMatrix& a, const HermitianMatrix& b,
                        const ToleranceConfig& cfg) {
    OrderCertificate order = loewner_geq(a, b, cfg);
    if (order.verdict != Verdict::GEQ) {
        throw HypothesisViolated("hypothesis A >= B failed with minimum eigenvalue " +
                                     std::to_string(order.min_eig),
                                 "loewner_geq(A,B)", std::move(order.witness));
    }
    OrderCertificate psd = is_psd(b, cfg);
    if (psd.verdict != Verdict::GEQ) {
        throw HypothesisViolated("hypothesis B >= 0 failed with minimum eigenvalue " +
                                     std::to_string(psd.min_eig),
                                 "is_psd(B)", std::move(psd.witness));
    }
}

int rank_from(const std::vector<double>& lambdas) {
    const double spectral =
        std::max(std::abs(lambdas.front()), std::abs(lambdas.back()));
    const double cut = kRankThreshold * spectral;
    int rank = 0;
    for (double lambda : lambdas)
        if (lambda > cut) ++rank;
    return rank;
}

/// Product of the eigenvalues with rounding-level negatives clipped to zero;
/// the sign of the raw product is not stable for rank-deficient input, so
/// nonnegativity is enforced factor by factor.
double det_from(const std::vector<double>& lambdas) {
    double det = 1.0;
    for (double lambda : lambdas) det *= std::max(lambda, 0.0);
    return det;
}

double trace_from(const std::vector<double>& lambdas) {
    double trace = 0.0;
    for (double lambda : lambdas) trace += lambda;
    return trace;
}

HermitianMatrix inverse_from(const EigenDecomposition& d, const ToleranceConfig& cfg) {
    const int n = d.u.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Complex sum(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                sum += d.u(i, k) * (1.0 / d.lambdas[k]) * std::conj(d.u(j, k));
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

} // namespace

OrderCertificate is_psd(const HermitianMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    return certificate_from(eigh(a, cfg), cfg.psd);
}

OrderCertificate loewner_geq(const HermitianMatrix& a, const HermitianMatrix& b,
                             const ToleranceConfig& cfg) {
    return is_psd(a - b, cfg);
}

OrderCertificate sqrt_monotone_check(const HermitianMatrix& a, const HermitianMatrix& b,
                                     const ToleranceConfig& cfg) {
    cfg.validate();
    require_hypothesis(a, b, cfg);
    return loewner_geq(psd_sqrt(a, cfg).root, psd_sqrt(b, cfg).root, cfg);
}

MonotonicityReport monotonicity_report(const HermitianMatrix& a, const HermitianMatrix& b,
                                       const ToleranceConfig& cfg) {
    cfg.validate();
    require_hypothesis(a, b, cfg);

    const EigenDecomposition da = eigh(a, cfg);
    const EigenDecomposition db = eigh(b, cfg);

    MonotonicityReport report;
    report.rank_a = rank_from(da.lambdas);
    report.rank_b = rank_from(db.lambdas);
    report.det_a = det_from(da.lambdas);
    report.det_b = det_from(db.lambdas);
    report.trace_a = trace_from(da.lambdas);
    report.trace_b = trace_from(db.lambdas);

    const bool traces_equal = std::abs(report.trace_a - report.trace_b) <=
                              cfg.equality * std::max(1.0, std::abs(report.trace_a));
    report.trace_equality_implies_same =
        !traces_equal ||
        matrix_equal(a.matrix(), b.matrix(), 100.0 * cfg.equality);

    const double spectral_a =
        std::max(std::abs(da.lambdas.front()), std::abs(da.lambdas.back()));
    const double spectral_b =
        std::max(std::abs(db.lambdas.front()), std::abs(db.lambdas.back()));
    if (da.lambdas.back() > cfg.psd * spectral_a &&
        db.lambdas.back() > cfg.psd * spectral_b) {
        const OrderCertificate reversed =
            loewner_geq(inverse_from(db, cfg), inverse_from(da, cfg), cfg);
        report.inverse_reversed = (reversed.verdict == Verdict::GEQ);
    }

    report.sqrt_order = loewner_geq(psd_sqrt(a, cfg).root, psd_sqrt(b, cfg).root, cfg);
    return report;
}

} // namespace loewner
