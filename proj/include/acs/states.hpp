#pragma once

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acs/weyl.hpp"

namespace acs {

enum class ClosureRule { None, GcdOrbit, ConstantOne };
enum class Verdict { PSD, NOT_PSD };

std::string verdict_name(Verdict v);

using StateTable = std::map<IntVector, Complex, LexLess>;

/// A state presented through its value function on group elements,
/// u |-> omega(W_u). Linear functionals on the algebra arise by linear
/// extension (see evaluate). Immutable; copies share representation.
///
/// Kinds:
///   Delta      - 1 at the zero vector, 0 elsewhere.
///   Gaussian   - exp(-u^T mu u) for symmetric PSD mu.
///   Partial    - finite value table, optionally extended by a closure
///                rule; lookups outside the closure throw
///                UndeterminedValueError rather than inventing values.
///   PulledBack - value(u) = inner.value(M u) along a group hom.
class State {
 public:
  enum class Kind { Delta, Gaussian, Partial, PulledBack };

  static State delta(WeylAlgebra algebra);
  static State gaussian(WeylAlgebra algebra, Eigen::MatrixXd mu,
                        double psd_tol = kDefaultTolerances.psd);
  static State partial(WeylAlgebra algebra, StateTable table,
                       ClosureRule rule = ClosureRule::None);
  /// Partial state whose closure forces every value to 1.
  static State all_ones(WeylAlgebra algebra);
  static State pulled_back(State inner, GroupHom hom);

  Kind kind() const;
  const WeylAlgebra& algebra() const;

  Complex value(const IntVector& u) const;

  // kind-specific accessors; throw MalformedInputError on a wrong kind
  const Eigen::MatrixXd& mu() const;
  const StateTable& table() const;
  ClosureRule closure() const;
  const State& inner() const;
  const GroupHom& hom() const;

 private:
  struct Impl;
  explicit State(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Linear extension: sum over terms of coeff * value.
Complex evaluate(const State& s, const WeylElement& a);

/// omega' = omega o A(f) as a state on the source algebra of f; the source
/// algebra inherits hbar (and any boundary override) from s.
State pull_back(const State& s, const GroupHom& f);

/// The positivity certificate for one witness set: the Gram matrix
/// G[i][j] = omega(W_{u_i}^* W_{u_j}), its spectrum, and the verdict.
struct PositivityReport {
  double hbar = 0.0;
  std::vector<IntVector> witness;
  Eigen::MatrixXcd gram;
  Eigen::VectorXd eigenvalues;  // ascending
  Complex determinant;
  Verdict verdict = Verdict::PSD;
  double tolerance = kDefaultTolerances.psd;
};

/// Spectrum, determinant and verdict for a given Hermitian matrix. Throws
/// MalformedMatrixError when the matrix is not Hermitian within
/// tol.hermiticity.
PositivityReport analyze_gram(double hbar, std::vector<IntVector> witness,
                              Eigen::MatrixXcd gram,
                              const Tolerances& tol = kDefaultTolerances);

/// Gram matrix of the state at a witness set, entry formula
/// G[i][j] = exp(+i hbar tau(u_i, u_j)) * value(u_j - u_i).
/// Undetermined values propagate as UndeterminedValueError naming the
/// missing difference vector.
PositivityReport gram(const State& s, const std::vector<IntVector>& witness,
                      const Tolerances& tol = kDefaultTolerances);

/// Re-derives the verdict from a report: NOT_PSD iff the least eigenvalue
/// is below -tol.psd. Rejects non-Hermitian gram data.
Verdict check_psd(const PositivityReport& report,
                  const Tolerances& tol = kDefaultTolerances);

/// Canonical JSON document; key order is part of the format.
nlohmann::ordered_json to_json(const PositivityReport& report);
std::string to_canonical_text(const nlohmann::ordered_json& j);

}  // namespace acs
