#pragma once

#include <utility>

#include "loewner/complex_matrix.hpp"
#include "loewner/tolerance.hpp"

namespace loewner {

/// A validated self-adjoint matrix. Construction checks
/// ||M - M*||_F <= tau * max(1, ||M||_F) and then symmetrizes exactly:
/// the strict lower triangle is replaced by the conjugate of the upper
/// triangle and diagonal imaginary parts are zeroed, so every stored
/// instance satisfies M = M* bit-for-bit.
class HermitianMatrix {
public:
    explicit HermitianMatrix(ComplexMatrix m,
                             double tau_herm = ToleranceConfig{}.hermitian);

    int dim() const { return inner_.dim(); }
    const ComplexMatrix& matrix() const { return inner_; }

    const Complex& operator()(int i, int j) const { return inner_(i, j); }

    double frobenius_norm() const { return inner_.frobenius_norm(); }

    /// Real trace (diagonal imaginary parts are exactly zero).
    double trace_real() const;

private:
    ComplexMatrix inner_;
};

HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y);
HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y);
HermitianMatrix operator*(double scale, const HermitianMatrix& x);

/// Re<Ax, x>. The imaginary part must be below tau_eq * ||A||_F * ||x||^2
/// (guaranteed by the Hermitian symmetrization) and is discarded.
double quadratic_form(const HermitianMatrix& a, const Vector& x,
                      const ToleranceConfig& cfg = {});

/// Splits T into self-adjoint real and imaginary parts:
/// first = (T + T*)/2, second = (T - T*)/(2i), so T = first + i*second.
std::pair<HermitianMatrix, HermitianMatrix> cartesian_parts(
    const ComplexMatrix& t, const ToleranceConfig& cfg = {});

} // namespace loewner
