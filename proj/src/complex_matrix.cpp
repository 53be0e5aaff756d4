#include "loewner/complex_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace loewner {

namespace {

void require_finite(const std::vector<Complex>& entries) {
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (!std::isfinite(entries[k].real()) || !std::isfinite(entries[k].imag())) {
            throw InvalidMatrix("non-finite entry at flat index " + std::to_string(k));
        }
    }
}

void require_same_dim(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.dim() != y.dim()) {
        throw DimensionMismatch("matrix dimensions differ: " +
                                std::to_string(x.dim()) + " vs " +
                                std::to_string(y.dim()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(int n) : n_(n) {
    if (n < 0) throw InvalidMatrix("negative dimension");
    entries_.assign(static_cast<std::size_t>(n) * n, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int n, std::vector<Complex> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n < 0) throw InvalidMatrix("negative dimension");
    if (entries_.size() != static_cast<std::size_t>(n) * n) {
        throw DimensionMismatch("entry count " + std::to_string(entries_.size()) +
                                " does not match dimension " + std::to_string(n));
    }
    require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex& z : entries_) sum += std::norm(z);
    return std::sqrt(sum);
}

Complex ComplexMatrix::trace() const {
    Complex t(0.0, 0.0);
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y);
    const int n = x.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = x(i, j) + y(i, j);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y);
    const int n = x.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = x(i, j) - y(i, j);
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y);
    const int n = x.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex xik = x(i, k);
            if (xik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) out(i, j) += xik * y(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& x) {
    const int n = x.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = scale * x(i, j);
    return out;
}

ComplexMatrix operator*(double scale, const ComplexMatrix& x) {
    return Complex(scale, 0.0) * x;
}

Vector operator*(const ComplexMatrix& m, const Vector& x) {
    const int n = m.dim();
    if (x.size() != static_cast<std::size_t>(n)) {
        throw DimensionMismatch("vector length " + std::to_string(x.size()) +
                                " does not match matrix dimension " +
                                std::to_string(n));
    }
    Vector out(x.size(), Complex(0.0, 0.0));
    for (int i = 0; i < n; ++i) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < n; ++j) acc += m(i, j) * x[j];
        out[i] = acc;
    }
    return out;
}

Complex inner_product(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) {
        throw DimensionMismatch("vector lengths differ");
    }
    Complex acc(0.0, 0.0);
    for (std::size_t k = 0; k < u.size(); ++k) acc += u[k] * std::conj(v[k]);
    return acc;
}

double vector_norm(const Vector& x) {
    double sum = 0.0;
    for (const Complex& z : x) sum += std::norm(z);
    return std::sqrt(sum);
}

double commutator_norm(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_dim(x, y);
    return (x * y - y * x).frobenius_norm();
}

bool matrix_equal(const ComplexMatrix& x, const ComplexMatrix& y, double tau) {
    require_same_dim(x, y);
    const double scale =
        std::max({1.0, x.frobenius_norm(), y.frobenius_norm()});
    return (x - y).frobenius_norm() <= tau * scale;
}

} // namespace loewner
