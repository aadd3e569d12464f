#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace acs {

using Int = std::int64_t;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Complex = std::complex<double>;

/// Strict weak order on integer vectors: shorter first, then lexicographic.
/// Used as the canonical key order everywhere a deterministic term layout
/// is required.
struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

/// Numeric thresholds shared across the library. Defaults are frozen; the
/// CLI may override individual entries per invocation.
struct Tolerances {
  double hermiticity = 1e-12;  // max allowed |G - G^H| entry
  double psd = 1e-9;           // eigenvalue cutoff for the PSD verdict
  double prune = 1e-15;        // coefficient modulus below which terms drop
};

inline constexpr Tolerances kDefaultTolerances{};

/// Admissibility margin for hbar around the lattice 2*pi*Z.
inline constexpr double kHbarBoundaryTol = 1e-9;

std::string to_string(const IntVector& v);
std::string format_double(double x);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedInputError : public Error {
 public:
  using Error::Error;
};

/// Raised when a candidate group map fails M^T tau' M = tau; carries the
/// first offending matrix entry.
class PairingViolationError : public Error {
 public:
  PairingViolationError(std::string msg, Eigen::Index row, Eigen::Index col)
      : Error(std::move(msg)), row(row), col(col) {}
  Eigen::Index row;
  Eigen::Index col;
};

class AlgebraMismatchError : public Error {
 public:
  using Error::Error;
};

class InadmissibleHbarError : public Error {
 public:
  using Error::Error;
};

/// A partial state was asked for a value its constraints do not force.
/// Carries the requested vector so callers can report exactly what is
/// missing.
class UndeterminedValueError : public Error {
 public:
  UndeterminedValueError(std::string msg, IntVector v)
      : Error(std::move(msg)), vector(std::move(v)) {}
  IntVector vector;
};

/// Two table entries lie in the same orbit class but disagree in value.
class OrbitInconsistencyError : public Error {
 public:
  OrbitInconsistencyError(std::string msg, IntVector a, IntVector b)
      : Error(std::move(msg)), first(std::move(a)), second(std::move(b)) {}
  IntVector first;
  IntVector second;
};

class UnsupportedRankError : public Error {
 public:
  using Error::Error;
};

class NotOrientationPreservingError : public Error {
 public:
  using Error::Error;
};

class MalformedMatrixError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string msg, std::size_t position)
      : Error(std::move(msg)), position(position) {}
  std::size_t position;
};

}  // namespace acs
