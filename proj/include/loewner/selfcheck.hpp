#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace loewner::selfcheck {

/// Default corpus seed; any other value exercises the same properties on a
/// different deterministic corpus.
inline constexpr std::uint64_t kDefaultSeed = 0x4C6F65776E6572ULL;

struct CheckResult {
    std::string name;
    bool passed = false;
    int cases = 0;
    std::string details; // first failure, empty when passed
};

/// (1) Squared PSD root reproduces the input on 500 seeded PSD matrices.
CheckResult check_sqrt_correctness(std::uint64_t seed);

/// (2) Spectral and iterative square roots agree: 200 nonsingular corpora
/// to 100x equality tolerance, 50 shifted singular corpora to 2 sqrt(shift)
/// plus the same.
CheckResult check_sqrt_uniqueness(std::uint64_t seed);

/// (3) The square root commutes with everything that commutes with the
/// input, on 500 generated commuting pairs.
CheckResult check_commutation_propagation(std::uint64_t seed);

/// (4) A >= B >= 0 implies sqrt(A) >= sqrt(B) on 1000 dominated pairs, with
/// the Cauchy-Schwarz chain asserted on any counterexample witness.
CheckResult check_sqrt_monotonicity(std::uint64_t seed);

/// (5) Rank, determinant, trace, and inverse-order corollaries on the same
/// corpus plus a nonsingular sub-corpus.
CheckResult check_order_corollaries(std::uint64_t seed);

/// (6) Congruence diagonalization of 200 PSD pairs including rank-deficient
/// ones: diagonality, reconstruction, and order equivalence.
CheckResult check_congruence(std::uint64_t seed);

/// (7) Eigenvalue-based PSD verdicts agree with the principal-minors oracle
/// on 300 PSD, boundary, and indefinite matrices.
CheckResult check_minors_oracle(std::uint64_t seed);

/// (8) Eigensolver reconstruction, unitarity, trace, and norm invariants on
/// 1000 seeds, plus convergence for every dimension up to 64.
CheckResult check_eigen_invariants(std::uint64_t seed);

/// All eight checks in order.
std::vector<CheckResult> run_all(std::uint64_t seed);

} // namespace loewner::selfcheck
