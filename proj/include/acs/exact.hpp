#pragma once

#include <map>
#include <vector>

#include "acs/weyl.hpp"

namespace acs {

/// A Gaussian integer a + b i.
struct GaussInt {
  Int re = 0;
  Int im = 0;

  GaussInt operator+(GaussInt o) const { return {re + o.re, im + o.im}; }
  GaussInt operator*(GaussInt o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussInt&) const = default;
};

/// An element of Z[i][zeta] for zeta = exp(2*pi*i/q), stored as the
/// coefficient vector of powers zeta^0 .. zeta^{q-1}. Arithmetic reduces
/// exponents mod q, so every operation is exact; only to_complex rounds.
class Cyclotomic {
 public:
  explicit Cyclotomic(int order);
  static Cyclotomic constant(int order, GaussInt g);
  static Cyclotomic root_power(int order, Int k);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<GaussInt>& coeffs() const { return coeffs_; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic operator*(const Cyclotomic& o) const;
  /// Multiplication by zeta^k.
  Cyclotomic shifted(Int k) const;

  bool is_zero() const;
  Complex to_complex() const;

 private:
  std::vector<GaussInt> coeffs_;
};

/// hbar = 2*pi*p/q with q > 0; the Weyl phases then live in the cyclic
/// group generated by zeta_q.
struct RationalHbar {
  Int p = 1;
  Int q = 1;

  double to_double() const;
};

/// Weyl sums with exact cyclotomic coefficients, used to cross-validate
/// the floating path at rational hbar. Mirrors the floating normal form:
/// canonically ordered keys, zero coefficients dropped.
class ExactWeylElement {
 public:
  ExactWeylElement(PresymplecticGroup group, RationalHbar hbar);

  const PresymplecticGroup& group() const { return group_; }
  RationalHbar hbar() const { return hbar_; }
  const std::map<IntVector, Cyclotomic, LexLess>& terms() const { return terms_; }

  void add_term(const IntVector& u, const Cyclotomic& c);

  /// Floating-point shadow of this element, term by term.
  WeylElement to_floating(const WeylAlgebra& alg) const;

 private:
  PresymplecticGroup group_;
  RationalHbar hbar_;
  std::map<IntVector, Cyclotomic, LexLess> terms_;
};

ExactWeylElement exact_symbol(const PresymplecticGroup& group, RationalHbar hbar,
                              const IntVector& u, GaussInt coeff);
ExactWeylElement exact_add(const ExactWeylElement& a, const ExactWeylElement& b);
ExactWeylElement exact_mul(const ExactWeylElement& a, const ExactWeylElement& b);

}  // namespace acs
