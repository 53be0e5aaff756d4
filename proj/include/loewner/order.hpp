#pragma once

#include <optional>

#include "loewner/sqrtm.hpp"

namespace loewner {

enum class Verdict { GEQ, NOT_GEQ };

/// Outcome of a Loewner comparison. The witness is the most negative
/// eigenpair of the difference and is present exactly when the verdict is
/// NOT_GEQ; min_eig is always the minimum eigenvalue of the difference.
struct OrderCertificate {
    Verdict verdict = Verdict::NOT_GEQ;
    std::optional<EigenPair> witness;
    double min_eig = 0.0;
};

/// Loewner corollaries for a pair with A >= B >= 0: ranks, determinants and
/// traces of both sides, the evaluated instance of "equal traces implies
/// equal matrices", the inverse reversal B^-1 >= A^-1 (present only when
/// both matrices are nonsingular), and the square-root order certificate.
struct MonotonicityReport {
    int rank_a = 0;
    int rank_b = 0;
    double det_a = 0.0;
    double det_b = 0.0;
    double trace_a = 0.0;
    double trace_b = 0.0;
    bool trace_equality_implies_same = true;
    std::optional<bool> inverse_reversed;
    OrderCertificate sqrt_order;
};

/// GEQ iff the minimum eigenvalue of A is >= -psd tolerance times
/// max(1, spectral norm of A).
OrderCertificate is_psd(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

/// is_psd applied to A - B.
OrderCertificate loewner_geq(const HermitianMatrix& a, const HermitianMatrix& b,
                             const ToleranceConfig& cfg = {});

/// Verifies the hypothesis A >= B >= 0 (throwing HypothesisViolated with the
/// failing predicate and witness otherwise), then compares the PSD square
/// roots. The returned verdict is GEQ for every valid input; NOT_GEQ would
/// expose a defect and is surfaced, never swallowed.
OrderCertificate sqrt_monotone_check(const HermitianMatrix& a, const HermitianMatrix& b,
                                     const ToleranceConfig& cfg = {});

/// Evaluates the order corollaries for a pair satisfying A >= B >= 0.
MonotonicityReport monotonicity_report(const HermitianMatrix& a, const HermitianMatrix& b,
                                       const ToleranceConfig& cfg = {});

} // namespace loewner
