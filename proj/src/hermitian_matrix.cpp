#include "loewner/hermitian_matrix.hpp"

#include <cmath>
#include <string>

namespace loewner {

HermitianMatrix::HermitianMatrix(ComplexMatrix m, double tau_herm)
    : inner_(std::move(m)) {
    const int n = inner_.dim();
    double dev_sq = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dev_sq += std::norm(inner_(i, j) - std::conj(inner_(j, i)));
    const double deviation = std::sqrt(dev_sq);
    const double scale = std::max(1.0, inner_.frobenius_norm());
    if (deviation > tau_herm * scale) {
        throw NotHermitian("matrix deviates from self-adjointness by " +
                           std::to_string(deviation), deviation);
    }
    for (int i = 0; i < n; ++i) {
        inner_(i, i) = Complex(inner_(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) inner_(j, i) = std::conj(inner_(i, j));
    }
}

double HermitianMatrix::trace_real() const {
    double t = 0.0;
    for (int i = 0; i < dim(); ++i) t += inner_(i, i).real();
    return t;
}

// Sums and real scalings of exactly symmetrized matrices stay exactly
// symmetric in IEEE arithmetic, so revalidation always succeeds.
HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y) {
    return HermitianMatrix(x.matrix() + y.matrix());
}

HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y) {
    return HermitianMatrix(x.matrix() - y.matrix());
}

HermitianMatrix operator*(double scale, const HermitianMatrix& x) {
    return HermitianMatrix(scale * x.matrix());
}

double quadratic_form(const HermitianMatrix& a, const Vector& x,
                      const ToleranceConfig& cfg) {
    if (static_cast<int>(x.size()) != a.dim())
        throw DimensionMismatch("vector length does not match matrix dimension");
    const Complex value = inner_product(a.matrix() * x, x);
    const double xn = vector_norm(x);
    const double bound = cfg.equality * std::max(1.0, a.frobenius_norm() * xn * xn);
    if (std::abs(value.imag()) > bound) {
        throw InvalidMatrix("quadratic form has imaginary residue " +
                            std::to_string(value.imag()));
    }
    return value.real();
}

std::pair<HermitianMatrix, HermitianMatrix> cartesian_parts(
    const ComplexMatrix& t, const ToleranceConfig& cfg) {
    const int n = t.dim();
    ComplexMatrix re(n);
    ComplexMatrix im(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex sum = t(i, j) + std::conj(t(j, i));
            const Complex diff = t(i, j) - std::conj(t(j, i));
            re(i, j) = Complex(sum.real() / 2.0, sum.imag() / 2.0);
            // diff / (2i) = (diff.imag - i*diff.real) / 2
            im(i, j) = Complex(diff.imag() / 2.0, -diff.real() / 2.0);
        }
    }
    return {HermitianMatrix(std::move(re), cfg.hermitian),
            HermitianMatrix(std::move(im), cfg.hermitian)};
}

} // namespace loewner
