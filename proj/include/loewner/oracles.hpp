#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "loewner/hermitian_matrix.hpp"

namespace loewner {

/// Deterministic 64-bit mixing stream (split-mix recurrence). The constants
/// are part of the library contract: any implementation of this recurrence,
/// in any language, reproduces the same test corpora bit-for-bit.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Sum of 12 uniforms minus 6: mean 0, variance 1, no platform-dependent
    /// transcendental calls.
    double pseudo_normal() {
        double sum = 0.0;
        for (int i = 0; i < 12; ++i) sum += uniform();
        return sum - 6.0;
    }

private:
    std::uint64_t state_;
};

/// Derives an independent stream seed from a base seed and a salt.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    return SplitMix64(seed ^ (salt * 0x9E3779B97F4A7C15ULL)).next();
}

/// Value seed for the deterministic matrix generators: same seed and n,
/// same matrices, bit-for-bit on one platform.
struct SeededGenerator {
    std::uint64_t seed = 0;
    int n = 1;
};

/// Brute-force PSD test: every principal minor over all 2^n - 1 nonempty
/// index subsets must be >= -equality tolerance times that minor's scale
/// (max of 1 and its Hadamard bound). Capped at n <= 12.
bool psd_by_minors(const HermitianMatrix& a, const ToleranceConfig& cfg = {});

/// G*G for an r x n draw of pseudo-normal complex entries (r = rank when
/// given, else n); PSD by construction with rank at most r.
HermitianMatrix gen_psd(const SeededGenerator& g, std::optional<int> rank = {});

/// B = H*H and A = B + G*G from two independent draws; guarantees
/// A >= B >= 0 by construction.
std::pair<HermitianMatrix, HermitianMatrix> gen_dominated_pair(const SeededGenerator& g);

/// A PSD plus B = c0 I + c1 A + c2 A^2 + i(d0 I + d1 A) with seeded real
/// coefficients; A and B commute by construction.
std::pair<HermitianMatrix, ComplexMatrix> gen_commuting_pair(const SeededGenerator& g);

} // namespace loewner
