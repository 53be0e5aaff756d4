#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loewner {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

/// A matrix failed validation (non-square, non-finite entries).
class InvalidMatrix : public Error {
public:
    explicit InvalidMatrix(const std::string& msg) : Error(msg) {}
};

/// Input was not self-adjoint within the validation tolerance.
class NotHermitian : public Error {
public:
    NotHermitian(const std::string& msg, double deviation)
        : Error(msg), deviation(deviation) {}
    double deviation;
};

/// An iteration failed to reach its convergence threshold within its cap;
/// residual is the quantity that was still too large (off-diagonal mass for
/// the eigensolver, last relative step for the square-root iteration).
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& msg, double residual)
        : Error(msg), residual(residual) {}
    double residual;
};

/// An eigenvalue together with a unit eigenvector, used as a certificate witness.
struct EigenPair {
    double value = 0.0;
    Vector vector;
};

/// Input was not positive semidefinite; carries the most negative eigenpair.
class NotPsd : public Error {
public:
    NotPsd(const std::string& msg, EigenPair witness)
        : Error(msg), witness(std::move(witness)) {}
    EigenPair witness;
};

/// Two matrices that were required to commute do not.
class NotCommuting : public Error {
public:
    NotCommuting(const std::string& msg, double commutator, double bound)
        : Error(msg), commutator(commutator), bound(bound) {}
    double commutator;
    double bound;
};

/// An inverse inside the Denman-Beavers iteration hit a vanishing pivot.
class SingularIteration : public Error {
public:
    explicit SingularIteration(const std::string& msg) : Error(msg) {}
};

/// The congruence factor P could not be inverted.
class SingularP : public Error {
public:
    explicit SingularP(const std::string& msg) : Error(msg) {}
};

/// A matrix that had to be invertible was singular to working precision.
class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& msg) : Error(msg) {}
};

/// An operation's order-theoretic hypothesis failed; names the precondition
/// and carries the witness eigenpair that broke it.
class HypothesisViolated : public Error {
public:
    HypothesisViolated(const std::string& msg, std::string which,
                       std::optional<EigenPair> witness)
        : Error(msg), which(std::move(which)), witness(std::move(witness)) {}
    std::string which;
    std::optional<EigenPair> witness;
};

/// Matrix file could not be parsed; position is 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

/// Matrix file parsed but its dimensions are inconsistent.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// Brute-force oracle refused an input above its dimension cap.
class DimensionTooLarge : public Error {
public:
    explicit DimensionTooLarge(const std::string& msg) : Error(msg) {}
};

} // namespace loewner
