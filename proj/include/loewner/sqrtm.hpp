#pragma once

#include "loewner/eigen.hpp"
#include "loewner/hermitian_matrix.hpp"

namespace loewner {

/// Diagonal shift factor applied before the iterative square root when the
/// input is singular to working precision.
inline constexpr double kShiftEpsilon = 1e-10;

/// The unique PSD square root plus the total magnitude of the (rounding
/// level) negative eigenvalues that were clipped to zero before the
/// square roots were taken.
struct SqrtResult {
    HermitianMatrix root;
    double clipped_mass;
};

/// Spectral square root: eigendecompose, clip rounding-negative eigenvalues,
/// take elementwise square roots, recompose. Throws NotPsd with the most
/// negative eigenpair when the minimum eigenvalue is below -psd tolerance
/// times the spectral norm.
SqrtResult psd_sqrt(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

/// The diagonal shift the iterative square root will apply to this input:
/// kShiftEpsilon * max(1, spectral norm) when the minimum eigenvalue is
/// below that value, zero otherwise.
double denman_beavers_shift(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

/// Coupled Newton iteration Y <- (Y + Z^-1)/2, Z <- (Z + Y^-1)/2 from
/// Y = A + delta I, Z = I; converges to the square root of A + delta I.
/// Implemented independently of psd_sqrt so the two can cross-validate the
/// uniqueness of the PSD root.
HermitianMatrix denman_beavers_sqrt(const HermitianMatrix& a,
                                    const ToleranceConfig& cfg = {});

/// Checks that B commutes with A, diagonalizes A simultaneously with the
/// real and imaginary parts of B, and returns the commutator norm of B with
/// the PSD square root of A (small by the propagation property).
double sqrt_commutes(const HermitianMatrix& a, const ComplexMatrix& b,
                     const ToleranceConfig& cfg = {});

} // namespace loewner
