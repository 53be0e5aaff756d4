#pragma once

#include <cstddef>
#include <vector>

#include "loewner/errors.hpp"

namespace loewner {

/// Dense square complex matrix, row-major. Entries are validated finite at
/// construction; every library operation treats it as an immutable value.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// n-by-n zero matrix.
    explicit ComplexMatrix(int n);

    /// Takes ownership of row-major entries; requires entries.size() == n*n
    /// and every component finite.
    ComplexMatrix(int n, std::vector<Complex> entries);

    static ComplexMatrix identity(int n);

    int dim() const { return n_; }

    const Complex& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }
    Complex& operator()(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix adjoint() const;

    double frobenius_norm() const;
    Complex trace() const;

private:
    int n_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& x);
ComplexMatrix operator*(double scale, const ComplexMatrix& x);

Vector operator*(const ComplexMatrix& m, const Vector& x);

/// <u, v> = sum u_i conj(v_i); linear in the first argument.
Complex inner_product(const Vector& u, const Vector& v);
double vector_norm(const Vector& x);

/// Frobenius norm of XY - YX.
double commutator_norm(const ComplexMatrix& x, const ComplexMatrix& y);

/// True iff ||X - Y||_F <= tau * max(1, ||X||_F, ||Y||_F).
bool matrix_equal(const ComplexMatrix& x, const ComplexMatrix& y, double tau);

} // namespace loewner
