#include "acs/weyl.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace acs {

double distance_to_2pi_lattice(double x) {
  const double period = 2.0 * std::numbers::pi;
  const double k = std::round(x / period);
  return std::abs(x - k * period);
}

WeylAlgebra::WeylAlgebra(PresymplecticGroup group, double hbar, bool boundary_override)
    : group_(std::move(group)), hbar_(hbar), boundary_override_(boundary_override) {
  if (!std::isfinite(hbar_)) {
    throw InadmissibleHbarError("hbar must be finite");
  }
  if (!boundary_override_ && distance_to_2pi_lattice(hbar_) <= kHbarBoundaryTol) {
    throw InadmissibleHbarError(
        "hbar = " + format_double(hbar_) +
        " lies on (or within " + format_double(kHbarBoundaryTol) +
        " of) the lattice 2*pi*Z; pass boundary_override to study the boundary");
  }
}

WeylElement::WeylElement(WeylAlgebra algebra, TermMap terms, double prune)
    : algebra_(std::move(algebra)) {
  for (auto& [u, c] : terms) {
    if (u.size() != algebra_.rank()) {
      throw MalformedInputError("term key " + to_string(u) +
                                " does not match algebra rank");
    }
    if (std::abs(c) >= prune) {
      terms_.emplace(u, c);
    }
  }
}

Complex WeylElement::coefficient(const IntVector& u) const {
  const auto it = terms_.find(u);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

WeylElement symbol(const WeylAlgebra& alg, const IntVector& u) {
  if (u.size() != alg.rank()) {
    throw MalformedInputError("symbol: vector length does not match algebra rank");
  }
  TermMap terms;
  terms.emplace(u, Complex(1.0, 0.0));
  return WeylElement(alg, std::move(terms));
}

WeylElement unit(const WeylAlgebra& alg) {
  return symbol(alg, IntVector::Zero(alg.rank()));
}

namespace {

void require_same_algebra(const WeylElement& a, const WeylElement& b, const char* op) {
  if (a.algebra() != b.algebra()) {
    throw AlgebraMismatchError(std::string(op) +
                               ": operands live in different Weyl algebras");
  }
}

}  // namespace

WeylElement add(const WeylElement& a, const WeylElement& b, double prune) {
  require_same_algebra(a, b, "add");
  TermMap terms = a.terms();
  for (const auto& [u, c] : b.terms()) {
    terms[u] += c;
  }
  return WeylElement(a.algebra(), std::move(terms), prune);
}

WeylElement scale(Complex c, const WeylElement& a, double prune) {
  TermMap terms;
  for (const auto& [u, coeff] : a.terms()) {
    terms.emplace(u, c * coeff);
  }
  return WeylElement(a.algebra(), std::move(terms), prune);
}

WeylElement mul(const WeylElement& a, const WeylElement& b, double prune) {
  require_same_algebra(a, b, "mul");
  const auto& g = a.algebra().group();
  const double hbar = a.algebra().hbar();
  TermMap terms;
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      const Int k = pairing(g, u, v);
      const Complex phase = std::polar(1.0, -hbar * static_cast<double>(k));
      terms[u + v] += cu * cv * phase;
    }
  }
  return WeylElement(a.algebra(), std::move(terms), prune);
}

WeylElement star(const WeylElement& a) {
  TermMap terms;
  for (const auto& [u, c] : a.terms()) {
    terms.emplace(-u, std::conj(c));
  }
  // conjugation of nonzero coefficients cannot shrink moduli; no pruning
  return WeylElement(a.algebra(), std::move(terms), 0.0);
}

double term_distance(const WeylElement& a, const WeylElement& b) {
  double d = 0.0;
  for (const auto& [u, c] : a.terms()) {
    d = std::max(d, std::abs(c - b.coefficient(u)));
  }
  for (const auto& [u, c] : b.terms()) {
    d = std::max(d, std::abs(c - a.coefficient(u)));
  }
  return d;
}

AlgebraHom::AlgebraHom(GroupHom hom, WeylAlgebra source, WeylAlgebra target)
    : hom_(std::move(hom)), source_(std::move(source)), target_(std::move(target)) {
  if (hom_.source() != source_.group() || hom_.target() != target_.group()) {
    throw AlgebraMismatchError("induced_hom: group hom does not match the algebras");
  }
  if (source_.hbar() != target_.hbar()) {
    throw AlgebraMismatchError("induced_hom: source and target algebras must share hbar");
  }
}

WeylElement AlgebraHom::operator()(const WeylElement& a) const {
  if (a.algebra() != source_) {
    throw AlgebraMismatchError("induced hom applied to element of a different algebra");
  }
  TermMap terms;
  for (const auto& [u, c] : a.terms()) {
    terms[hom_.apply(u)] += c;
  }
  return WeylElement(target_, std::move(terms));
}

AlgebraHom induced_hom(const GroupHom& f, const WeylAlgebra& source,
                       const WeylAlgebra& target) {
  return AlgebraHom(f, source, target);
}

namespace {

class ElementParser {
 public:
  ElementParser(const WeylAlgebra& alg, std::string_view text)
      : alg_(alg), text_(text) {}

  WeylElement parse() {
    skip_ws();
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (pos_ != text_.size()) fail("trailing input after zero element");
      return WeylElement(alg_);
    }
    TermMap terms;
    for (;;) {
      parse_term(terms);
      skip_ws();
      if (pos_ == text_.size()) break;
      expect('+');
    }
    return WeylElement(alg_, std::move(terms));
  }

 private:
  void parse_term(TermMap& terms) {
    skip_ws();
    Complex coeff(1.0, 0.0);
    if (peek() == '(') {
      ++pos_;
      const double re = parse_double();
      expect(',');
      const double im = parse_double();
      expect(')');
      expect('*');
      coeff = Complex(re, im);
    }
    skip_ws();
    if (peek() != 'W') fail("expected 'W'");
    ++pos_;
    expect('[');
    IntVector u(alg_.rank());
    for (Eigen::Index i = 0; i < alg_.rank(); ++i) {
      if (i) expect(',');
      u[i] = parse_int();
    }
    expect(']');
    if (u.size() != alg_.rank()) fail("coordinate count does not match rank");
    terms[u] += coeff;
  }

  double parse_double() {
    skip_ws();
    double value = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  Int parse_int() {
    skip_ws();
    Int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("element syntax error at position " + std::to_string(pos_) +
                         ": " + what,
                     pos_);
  }

  const WeylAlgebra& alg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylElement parse_element(const WeylAlgebra& alg, std::string_view text) {
  return ElementParser(alg, text).parse();
}

std::string to_text(const WeylElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [u, c] : a.terms()) {
    if (!first) out << " + ";
    first = false;
    out << '(' << format_double(c.real()) << ',' << format_double(c.imag()) << ")*W[";
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      if (i) out << ',';
      out << u[i];
    }
    out << ']';
  }
  return out.str();
}

}  // namespace acs
