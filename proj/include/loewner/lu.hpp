#pragma once

#include "loewner/complex_matrix.hpp"

namespace loewner {

/// LU factorization with partial pivoting of a square complex matrix.
/// Throws SingularMatrix when a pivot vanishes to working precision.
class LuDecomposition {
public:
    explicit LuDecomposition(const ComplexMatrix& m);

    Vector solve(const Vector& rhs) const;
    ComplexMatrix inverse() const;
    Complex determinant() const;

private:
    int n_;
    ComplexMatrix lu_;        // packed L (unit diagonal) and U
    std::vector<int> pivot_;  // row permutation
    int pivot_sign_;
};

ComplexMatrix inverse(const ComplexMatrix& m);
Complex determinant(const ComplexMatrix& m);

} // namespace loewner
