#include "loewner/oracles.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "loewner/lu.hpp"

namespace loewner {

namespace {

/// Row-major r x n draw; each entry consumes its real part first.
std::vector<Vector> draw_rows(SplitMix64& stream, int rows, int cols) {
    std::vector<Vector> g(rows, Vector(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const double re = stream.pseudo_normal();
            const double im = stream.pseudo_normal();
            g[i][j] = Complex(re, im);
        }
    return g;
}

/// G*G with the upper triangle mirrored: exactly Hermitian, PSD by
/// construction.
HermitianMatrix gram_of(const std::vector<Vector>& g, int n) {
    ComplexMatrix a(n);
    const int rows = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Complex sum(0.0, 0.0);
            for (int k = 0; k < rows; ++k) sum += std::conj(g[k][i]) * g[k][j];
            if (i == j) {
                a(i, i) = Complex(sum.real(), 0.0);
            } else {
                a(i, j) = sum;
                a(j, i) = std::conj(sum);
            }
        }
    }
    return HermitianMatrix(std::move(a));
}

} // namespace

bool psd_by_minors(const HermitianMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    const int n = a.dim();
    if (n > 12) {
        throw DimensionTooLarge("principal-minors oracle is capped at n = 12, got n = " +
                                std::to_string(n));
    }
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        const int k = static_cast<int>(idx.size());
        std::vector<Complex> sub(static_cast<std::size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                sub[static_cast<std::size_t>(i) * k + j] = a(idx[i], idx[j]);
        const ComplexMatrix minor_matrix(k, std::move(sub));
        const double minor = determinant(minor_matrix).real();

        double hadamard = 1.0;
        for (int i = 0; i < k; ++i) {
            double row_sq = 0.0;
            for (int j = 0; j < k; ++j) row_sq += std::norm(minor_matrix(i, j));
            hadamard *= std::sqrt(row_sq);
        }
        if (minor < -cfg.equality * std::max(1.0, hadamard)) return false;
    }
    return true;
}

HermitianMatrix gen_psd(const SeededGenerator& g, std::optional<int> rank) {
    const int r = rank.value_or(g.n);
    if (r < 0 || r > g.n) {
        throw InvalidMatrix("generator rank " + std::to_string(r) +
                            " is outside [0, " + std::to_string(g.n) + "]");
    }
    SplitMix64 stream(g.seed);
    return gram_of(draw_rows(stream, r, g.n), g.n);
}

std::pair<HermitianMatrix, HermitianMatrix> gen_dominated_pair(const SeededGenerator& g) {
    const HermitianMatrix b = gen_psd(g);
    const HermitianMatrix bump = gen_psd({mix_seed(g.seed, 1), g.n});
    return {b + bump, b};
}

std::pair<HermitianMatrix, ComplexMatrix> gen_commuting_pair(const SeededGenerator& g) {
    const HermitianMatrix a = gen_psd(g);
    SplitMix64 coeffs(mix_seed(g.seed, 2));
    const double c0 = coeffs.pseudo_normal();
    const double c1 = coeffs.pseudo_normal();
    const double c2 = coeffs.pseudo_normal();
    const double d0 = coeffs.pseudo_normal();
    const double d1 = coeffs.pseudo_normal();

    const ComplexMatrix& m = a.matrix();
    const ComplexMatrix identity = ComplexMatrix::identity(g.n);
    ComplexMatrix b = c0 * identity + c1 * m + c2 * (m * m) +
                      Complex(0.0, 1.0) * (d0 * identity + d1 * m);
    return {a, std::move(b)};
}

} // namespace loewner
