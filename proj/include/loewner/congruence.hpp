#pragma once

#include <vector>

#include "loewner/order.hpp"

namespace loewner {

/// Invertible P with P*AP = diag(d1) and P*BP = diag(d2) to tolerance.
/// cond_estimate is the ratio of the extreme singular values of P, computed
/// from the eigenvalues of P*P. Columns are sorted by d1 descending, ties
/// by d2 descending.
struct CongruenceResult {
    ComplexMatrix p;
    std::vector<double> d1;
    std::vector<double> d2;
    double cond_estimate = 1.0;
};

enum class Side { A, B };

/// Diagonalizes a PSD pair by one congruence: whiten by A + B on its range,
/// eigendecompose the whitened A, and append the common kernel unscaled.
/// By construction d1 + d2 is near 1 on the range and near 0 on the kernel.
CongruenceResult congruence_diag(const HermitianMatrix& a, const HermitianMatrix& b,
                                 const ToleranceConfig& cfg = {});

/// P^-* diag(d) P^-1 for the chosen side; recovers the original input to
/// a tolerance that scales with cond_estimate squared.
HermitianMatrix reconstruct(const CongruenceResult& result, Side which,
                            const ToleranceConfig& cfg = {});

/// True iff d1 >= d2 entrywise within psd tolerance; equivalent to the
/// Loewner comparison of the originating pair.
bool order_via_diagonals(const CongruenceResult& result, const ToleranceConfig& cfg = {});

} // namespace loewner
