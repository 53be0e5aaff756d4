#include "loewner/lu.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace loewner {

LuDecomposition::LuDecomposition(const ComplexMatrix& m)
    : n_(m.dim()), lu_(m), pivot_(static_cast<std::size_t>(m.dim())), pivot_sign_(1) {
    double max_entry = 0.0;
    for (const Complex& z : m.entries()) max_entry = std::max(max_entry, std::abs(z));
    // Pivots below this are indistinguishable from zero at working precision.
    const double singular_floor =
        std::max(max_entry, 1.0) * n_ * std::numeric_limits<double>::epsilon() * 1e-2;

    for (int col = 0; col < n_; ++col) {
        int best = col;
        double best_mag = std::abs(lu_(col, col));
        for (int row = col + 1; row < n_; ++row) {
            const double mag = std::abs(lu_(row, col));
            if (mag > best_mag) {
                best_mag = mag;
                best = row;
            }
        }
        pivot_[col] = best;
        if (best != col) {
            for (int j = 0; j < n_; ++j) std::swap(lu_(col, j), lu_(best, j));
            pivot_sign_ = -pivot_sign_;
        }
        const Complex pivot = lu_(col, col);
        if (std::abs(pivot) <= singular_floor) {
            throw SingularMatrix("vanishing pivot at column " + std::to_string(col));
        }
        for (int row = col + 1; row < n_; ++row) {
            const Complex factor = lu_(row, col) / pivot;
            lu_(row, col) = factor;
            for (int j = col + 1; j < n_; ++j) lu_(row, j) -= factor * lu_(col, j);
        }
    }
}

Vector LuDecomposition::solve(const Vector& rhs) const {
    if (rhs.size() != static_cast<std::size_t>(n_)) {
        throw DimensionMismatch("rhs length does not match matrix dimension");
    }
    Vector x = rhs;
    for (int i = 0; i < n_; ++i) {
        if (pivot_[i] != i) std::swap(x[i], x[pivot_[i]]);
    }
    for (int i = 1; i < n_; ++i)
        for (int j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
    for (int i = n_ - 1; i >= 0; --i) {
        for (int j = i + 1; j < n_; ++j) x[i] -= lu_(i, j) * x[j];
        x[i] /= lu_(i, i);
    }
    return x;
}

ComplexMatrix LuDecomposition::inverse() const {
    ComplexMatrix out(n_);
    Vector e(static_cast<std::size_t>(n_), Complex(0.0, 0.0));
    for (int col = 0; col < n_; ++col) {
        e[col] = Complex(1.0, 0.0);
        Vector x = solve(e);
        for (int row = 0; row < n_; ++row) out(row, col) = x[row];
        e[col] = Complex(0.0, 0.0);
    }
    return out;
}

Complex LuDecomposition::determinant() const {
    Complex det(static_cast<double>(pivot_sign_), 0.0);
    for (int i = 0; i < n_; ++i) det *= lu_(i, i);
    return det;
}

ComplexMatrix inverse(const ComplexMatrix& m) { return LuDecomposition(m).inverse(); }

Complex determinant(const ComplexMatrix& m) {
    // A vanishing pivot means an exactly (or numerically) zero determinant.
    try {
        return LuDecomposition(m).determinant();
    } catch (const SingularMatrix&) {
        return Complex(0.0, 0.0);
    }
}

} // namespace loewner
