#pragma once

#include <map>
#include <string>
#include <string_view>

#include "acs/presymplectic.hpp"

namespace acs {

/// Distance from x to the nearest point of 2*pi*Z.
double distance_to_2pi_lattice(double x);

/// The *-algebra of finite Weyl sums over a presymplectic group, at a fixed
/// hbar. Generators multiply as
///
///   W_u W_v = exp(-i hbar tau(u, v)) W_{u+v},   W_u^* = W_{-u}.
///
/// hbar must stay clear of 2*pi*Z (margin kHbarBoundaryTol); values on the
/// lattice make every exponential trivial and are rejected unless the
/// boundary_override flag is set.
class WeylAlgebra {
 public:
  WeylAlgebra(PresymplecticGroup group, double hbar, bool boundary_override = false);

  const PresymplecticGroup& group() const { return group_; }
  Eigen::Index rank() const { return group_.rank(); }
  double hbar() const { return hbar_; }
  bool boundary_override() const { return boundary_override_; }

  bool operator==(const WeylAlgebra& other) const {
    return hbar_ == other.hbar_ && group_ == other.group_;
  }
  bool operator!=(const WeylAlgebra& other) const { return !(*this == other); }

 private:
  PresymplecticGroup group_;
  double hbar_;
  bool boundary_override_;
};

using TermMap = std::map<IntVector, Complex, LexLess>;

/// A finite complex-linear combination of Weyl symbols, kept in normal
/// form: canonically ordered keys, no coefficient of modulus below the
/// pruning threshold. Immutable value type; the zero element is the empty
/// term map.
class WeylElement {
 public:
  explicit WeylElement(WeylAlgebra algebra) : algebra_(std::move(algebra)) {}
  WeylElement(WeylAlgebra algebra, TermMap terms,
              double prune = kDefaultTolerances.prune);

  const WeylAlgebra& algebra() const { return algebra_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of W_u, zero when absent.
  Complex coefficient(const IntVector& u) const;

 private:
  WeylAlgebra algebra_;
  TermMap terms_;
};

/// The generator W_u.
WeylElement symbol(const WeylAlgebra& alg, const IntVector& u);
/// W_0 = 1.
WeylElement unit(const WeylAlgebra& alg);

WeylElement add(const WeylElement& a, const WeylElement& b,
                double prune = kDefaultTolerances.prune);
WeylElement scale(Complex c, const WeylElement& a,
                  double prune = kDefaultTolerances.prune);
WeylElement mul(const WeylElement& a, const WeylElement& b,
                double prune = kDefaultTolerances.prune);
WeylElement star(const WeylElement& a);

inline WeylElement operator+(const WeylElement& a, const WeylElement& b) { return add(a, b); }
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return mul(a, b); }
inline WeylElement operator*(Complex c, const WeylElement& a) { return scale(c, a); }
inline WeylElement operator-(const WeylElement& a, const WeylElement& b) {
  return add(a, scale(Complex(-1.0, 0.0), b));
}

/// Max coefficient distance over the union of keys; the metric used by the
/// approximate-equality checks in tests.
double term_distance(const WeylElement& a, const WeylElement& b);

/// The algebra map induced by a pairing-compatible group hom:
/// sum a_u W_u  |->  sum a_u W'_{M u}. Multiplicative because the hom
/// preserves the pairing. Source and target must share hbar.
class AlgebraHom {
 public:
  AlgebraHom(GroupHom hom, WeylAlgebra source, WeylAlgebra target);

  WeylElement operator()(const WeylElement& a) const;

  const GroupHom& hom() const { return hom_; }
  const WeylAlgebra& source() const { return source_; }
  const WeylAlgebra& target() const { return target_; }

 private:
  GroupHom hom_;
  WeylAlgebra source_;
  WeylAlgebra target_;
};

AlgebraHom induced_hom(const GroupHom& f, const WeylAlgebra& source,
                       const WeylAlgebra& target);

/// Textual element syntax: `(re,im)*W[c1,c2,...] + ...`, whitespace
/// insensitive; a lone `0` denotes the zero element. Parse errors throw
/// ParseError carrying the offending position.
WeylElement parse_element(const WeylAlgebra& alg, std::string_view text);
std::string to_text(const WeylElement& a);

}  // namespace acs
