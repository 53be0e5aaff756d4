#pragma once

#include "loewner/errors.hpp"

namespace loewner {

/// Numerical tolerances shared across the library. All relative unless noted.
struct ToleranceConfig {
    double hermitian = 1e-10;    ///< self-adjointness validation
    double psd = 1e-9;           ///< eigenvalue floor for PSD verdicts
    double equality = 1e-9;      ///< matrix equality and reconstruction checks
    double convergence = 1e-13;  ///< eigensolver off-diagonal target
    int max_sweeps = 64;         ///< Jacobi sweep cap

    void validate() const {
        if (!(hermitian > 0.0) || !(psd > 0.0) || !(equality > 0.0) ||
            !(convergence > 0.0)) {
            throw InvalidMatrix("tolerances must be strictly positive");
        }
        if (max_sweeps < 1) {
            throw InvalidMatrix("max_sweeps must be at least 1");
        }
    }
};

/// Relative cut below which an eigenvalue counts as zero for rank purposes.
inline constexpr double kRankThreshold = 1e-9;

} // namespace loewner
