#include "acs/exact.hpp"

#include <cmath>
#include <numbers>

namespace acs {

Cyclotomic::Cyclotomic(int order) {
  if (order <= 0) throw MalformedInputError("cyclotomic order must be positive");
  coeffs_.assign(static_cast<std::size_t>(order), GaussInt{});
}

Cyclotomic Cyclotomic::constant(int order, GaussInt g) {
  Cyclotomic c(order);
  c.coeffs_[0] = g;
  return c;
}

Cyclotomic Cyclotomic::root_power(int order, Int k) {
  Cyclotomic c(order);
  const Int q = order;
  const Int idx = ((k % q) + q) % q;
  c.coeffs_[static_cast<std::size_t>(idx)] = GaussInt{1, 0};
  return c;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order() != o.order()) throw MalformedInputError("cyclotomic order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  }
  return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (order() != o.order()) throw MalformedInputError("cyclotomic order mismatch");
  const std::size_t q = coeffs_.size();
  Cyclotomic out(static_cast<int>(q));
  for (std::size_t i = 0; i < q; ++i) {
    if (coeffs_[i] == GaussInt{}) continue;
    for (std::size_t j = 0; j < q; ++j) {
      if (o.coeffs_[j] == GaussInt{}) continue;
      const std::size_t k = (i + j) % q;
      out.coeffs_[k] = out.coeffs_[k] + coeffs_[i] * o.coeffs_[j];
    }
  }
  return out;
}

Cyclotomic Cyclotomic::shifted(Int k) const {
  const Int q = order();
  Cyclotomic out(static_cast<int>(q));
  const Int s = ((k % q) + q) % q;
  for (Int i = 0; i < q; ++i) {
    out.coeffs_[static_cast<std::size_t>((i + s) % q)] = coeffs_[static_cast<std::size_t>(i)];
  }
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& g : coeffs_) {
    if (!(g == GaussInt{})) return false;
  }
  return true;
}

Complex Cyclotomic::to_complex() const {
  const long double q = static_cast<long double>(order());
  long double re = 0.0L, im = 0.0L;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const long double theta =
        2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / q;
    const long double c = std::cos(theta);
    const long double s = std::sin(theta);
    const long double a = static_cast<long double>(coeffs_[k].re);
    const long double b = static_cast<long double>(coeffs_[k].im);
    re += a * c - b * s;
    im += a * s + b * c;
  }
  return Complex(static_cast<double>(re), static_cast<double>(im));
}

double RationalHbar::to_double() const {
  return 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
}

ExactWeylElement::ExactWeylElement(PresymplecticGroup group, RationalHbar hbar)
    : group_(std::move(group)), hbar_(hbar) {
  if (hbar_.q <= 0) throw MalformedInputError("rational hbar needs q > 0");
}

void ExactWeylElement::add_term(const IntVector& u, const Cyclotomic& c) {
  if (u.size() != group_.rank()) {
    throw MalformedInputError("exact term key does not match group rank");
  }
  const auto it = terms_.find(u);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(u, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement ExactWeylElement::to_floating(const WeylAlgebra& alg) const {
  TermMap terms;
  for (const auto& [u, c] : terms_) {
    terms.emplace(u, c.to_complex());
  }
  return WeylElement(alg, std::move(terms), 0.0);
}

ExactWeylElement exact_symbol(const PresymplecticGroup& group, RationalHbar hbar,
                              const IntVector& u, GaussInt coeff) {
  ExactWeylElement e(group, hbar);
  e.add_term(u, Cyclotomic::constant(static_cast<int>(hbar.q), coeff));
  return e;
}

ExactWeylElement exact_add(const ExactWeylElement& a, const ExactWeylElement& b) {
  if (a.group() != b.group() || a.hbar().p != b.hbar().p || a.hbar().q != b.hbar().q) {
    throw AlgebraMismatchError("exact_add: element contexts differ");
  }
  ExactWeylElement out = a;
  for (const auto& [u, c] : b.terms()) {
    out.add_term(u, c);
  }
  return out;
}

ExactWeylElement exact_mul(const ExactWeylElement& a, const ExactWeylElement& b) {
  if (a.group() != b.group() || a.hbar().p != b.hbar().p || a.hbar().q != b.hbar().q) {
    throw AlgebraMismatchError("exact_mul: element contexts differ");
  }
  ExactWeylElement out(a.group(), a.hbar());
  const Int q = a.hbar().q;
  const Int p = a.hbar().p;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      const Int k = pairing(a.group(), u, v);
      // exp(-i hbar k) = zeta_q^{-p k}
      const Cyclotomic phased = (cu * cv).shifted(-(p * k) % q);
      out.add_term(u + v, phased);
    }
  }
  return out;
}

}  // namespace acs
