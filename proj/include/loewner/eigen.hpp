#pragma once

#include <vector>

#include "loewner/hermitian_matrix.hpp"

namespace loewner {

/// Adjacent sorted eigenvalues closer than this factor times the spectral
/// norm are treated as one degenerate cluster during simultaneous
/// diagonalization.
inline constexpr double kClusterGapFactor = 1e-8;

/// Unitary U and real eigenvalues with A = U diag(lambdas) U*.
/// lambdas are sorted descending (stable ties); each column of U is
/// phase-normalized so its first component of largest modulus is real
/// and nonnegative.
struct EigenDecomposition {
    ComplexMatrix u;
    std::vector<double> lambdas;
};

/// One unitary diagonalizing two commuting Hermitian matrices at once:
/// U*AU = diag(a_diag) and U*HU = diag(h_diag) to tolerance, column-aligned.
struct SimDiagResult {
    ComplexMatrix u;
    std::vector<double> a_diag;
    std::vector<double> h_diag;
};

/// Hermitian eigendecomposition by cyclic-by-row complex Jacobi rotations.
/// Converged when the off-diagonal Frobenius mass is <= convergence
/// tolerance times the Frobenius norm; throws NonConvergence past
/// max_sweeps sweeps.
EigenDecomposition eigh(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

/// Largest |eigenvalue|.
double spectral_norm(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

/// Simultaneous unitary diagonalization of commuting Hermitian matrices:
/// eigendecompose A, then rediagonalize H inside each degenerate eigenvalue
/// cluster of A. Throws NotCommuting when the commutator norm exceeds
/// equality tolerance times max(1, ||A||_F ||H||_F).
SimDiagResult sim_diag_commuting(const HermitianMatrix& a, const HermitianMatrix& h,
                                 const ToleranceConfig& cfg = {});

} // namespace loewner
