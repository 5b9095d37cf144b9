#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ncrep {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default tolerance for rank and zero decisions (relative to the largest
/// singular value of the matrix under test).
inline constexpr double kDefaultTol = 1e-9;

/// Coefficients below this modulus are dropped when a polynomial is normalized.
inline constexpr double kDropTol = 1e-14;

/// Invalid input: bad shapes, out-of-range parameters, malformed files.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not reach the requested accuracy, or a
/// computed object failed a structural check (residual, simplicity, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The representation handed to a routine that needs a simple one is not
/// simple (its commutant is larger than the scalars).
class NotSimpleError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

inline bool is_finite(Scalar z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace ncrep
