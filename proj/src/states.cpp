#include "acs/states.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace acs {

std::string verdict_name(Verdict v) {
  return v == Verdict::PSD ? "PSD" : "NOT_PSD";
}

struct State::Impl {
  WeylAlgebra algebra;
  Kind kind;
  Eigen::MatrixXd mu;                  // Gaussian
  StateTable table;                    // Partial
  ClosureRule rule = ClosureRule::None;
  std::optional<State> inner;          // PulledBack
  std::optional<GroupHom> hom;

  Impl(WeylAlgebra a, Kind k) : algebra(std::move(a)), kind(k) {}
};

State State::delta(WeylAlgebra algebra) {
  auto impl = std::make_shared<Impl>(std::move(algebra), Kind::Delta);
  return State(std::move(impl));
}

State State::gaussian(WeylAlgebra algebra, Eigen::MatrixXd mu, double psd_tol) {
  if (mu.rows() != algebra.rank() || mu.cols() != algebra.rank()) {
    throw MalformedInputError("gaussian: mu shape does not match algebra rank");
  }
  if (mu.rows() > 0) {
    if ((mu - mu.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      throw MalformedInputError("gaussian: mu must be symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mu, Eigen::EigenvaluesOnly);
    if (es.eigenvalues()(0) < -psd_tol) {
      throw MalformedInputError("gaussian: mu must be positive semidefinite, min eigenvalue " +
                                format_double(es.eigenvalues()(0)));
    }
  }
  auto impl = std::make_shared<Impl>(std::move(algebra), Kind::Gaussian);
  impl->mu = std::move(mu);
  return State(std::move(impl));
}

State State::partial(WeylAlgebra algebra, StateTable table, ClosureRule rule) {
  const IntVector zero = IntVector::Zero(algebra.rank());
  for (const auto& [u, c] : table) {
    if (u.size() != algebra.rank()) {
      throw MalformedInputError("partial: table key " + to_string(u) +
                                " does not match algebra rank");
    }
    (void)c;
  }
  const auto it = table.find(zero);
  if (it == table.end() || std::abs(it->second - Complex(1.0, 0.0)) > 1e-12) {
    throw MalformedInputError("partial: table must contain the zero vector with value 1");
  }
  if (rule == ClosureRule::GcdOrbit && algebra.rank() != 2) {
    throw UnsupportedRankError("gcd-orbit closure is defined on rank-2 groups only");
  }
  auto impl = std::make_shared<Impl>(std::move(algebra), Kind::Partial);
  impl->table = std::move(table);
  impl->rule = rule;
  return State(std::move(impl));
}

State State::all_ones(WeylAlgebra algebra) {
  StateTable table;
  table.emplace(IntVector::Zero(algebra.rank()), Complex(1.0, 0.0));
  return partial(std::move(algebra), std::move(table), ClosureRule::ConstantOne);
}

State State::pulled_back(State inner, GroupHom hom) {
  if (inner.algebra().group() != hom.target()) {
    throw AlgebraMismatchError("pulled_back: state does not live on the hom target");
  }
  WeylAlgebra source_alg(hom.source(), inner.algebra().hbar(),
                         inner.algebra().boundary_override());
  auto impl = std::make_shared<Impl>(std::move(source_alg), Kind::PulledBack);
  impl->inner = std::move(inner);
  impl->hom = std::move(hom);
  return State(std::move(impl));
}

State::Kind State::kind() const { return impl_->kind; }
const WeylAlgebra& State::algebra() const { return impl_->algebra; }

namespace {

Int gcd_class(const IntVector& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    g = std::gcd(g, v[i]);
  }
  return g;
}

bool is_zero_vector(const IntVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return false;
  }
  return true;
}

}  // namespace

Complex State::value(const IntVector& u) const {
  if (u.size() != impl_->algebra.rank()) {
    throw MalformedInputError("state value: vector length does not match algebra rank");
  }
  switch (impl_->kind) {
    case Kind::Delta:
      return is_zero_vector(u) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    case Kind::Gaussian: {
      const Eigen::VectorXd x = u.cast<double>();
      return Complex(std::exp(-x.dot(impl_->mu * x)), 0.0);
    }
    case Kind::Partial: {
      switch (impl_->rule) {
        case ClosureRule::ConstantOne:
          return Complex(1.0, 0.0);
        case ClosureRule::GcdOrbit: {
          IntVector rep(2);
          rep << gcd_class(u), 0;
          const auto it = impl_->table.find(rep);
          if (it != impl_->table.end()) return it->second;
          throw UndeterminedValueError(
              "state value at " + to_string(u) + " (orbit representative " +
                  to_string(rep) + ") is not determined by the constraints",
              u);
        }
        case ClosureRule::None: {
          const auto it = impl_->table.find(u);
          if (it != impl_->table.end()) return it->second;
          throw UndeterminedValueError(
              "state value at " + to_string(u) + " is not determined", u);
        }
      }
      throw MalformedInputError("partial: unknown closure rule");
    }
    case Kind::PulledBack:
      return impl_->inner->value(impl_->hom->apply(u));
  }
  throw MalformedInputError("state: unknown kind");
}

const Eigen::MatrixXd& State::mu() const {
  if (impl_->kind != Kind::Gaussian) throw MalformedInputError("state is not Gaussian");
  return impl_->mu;
}

const StateTable& State::table() const {
  if (impl_->kind != Kind::Partial) throw MalformedInputError("state is not Partial");
  return impl_->table;
}

ClosureRule State::closure() const {
  if (impl_->kind != Kind::Partial) throw MalformedInputError("state is not Partial");
  return impl_->rule;
}

const State& State::inner() const {
  if (impl_->kind != Kind::PulledBack) throw MalformedInputError("state is not PulledBack");
  return *impl_->inner;
}

const GroupHom& State::hom() const {
  if (impl_->kind != Kind::PulledBack) throw MalformedInputError("state is not PulledBack");
  return *impl_->hom;
}

Complex evaluate(const State& s, const WeylElement& a) {
  if (s.algebra() != a.algebra()) {
    throw AlgebraMismatchError("evaluate: state and element live in different algebras");
  }
  Complex acc(0.0, 0.0);
  for (const auto& [u, c] : a.terms()) {
    acc += c * s.value(u);
  }
  return acc;
}

State pull_back(const State& s, const GroupHom& f) {
  return State::pulled_back(s, f);
}

PositivityReport analyze_gram(double hbar, std::vector<IntVector> witness,
                              Eigen::MatrixXcd gram, const Tolerances& tol) {
  if (gram.rows() != gram.cols()) {
    throw MalformedMatrixError("gram matrix must be square");
  }
  const double herm_defect =
      gram.size() == 0 ? 0.0 : (gram - gram.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > tol.hermiticity) {
    throw MalformedMatrixError("gram matrix is not Hermitian: defect " +
                               format_double(herm_defect) + " exceeds " +
                               format_double(tol.hermiticity));
  }
  PositivityReport report;
  report.hbar = hbar;
  report.witness = std::move(witness);
  report.gram = std::move(gram);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(report.gram, Eigen::EigenvaluesOnly);
  report.eigenvalues = es.eigenvalues();
  report.determinant = report.gram.determinant();
  report.tolerance = tol.psd;
  report.verdict = (report.eigenvalues.size() > 0 && report.eigenvalues(0) < -tol.psd)
                       ? Verdict::NOT_PSD
                       : Verdict::PSD;
  return report;
}

PositivityReport gram(const State& s, const std::vector<IntVector>& witness,
                      const Tolerances& tol) {
  const auto& g = s.algebra().group();
  const double hbar = s.algebra().hbar();
  const auto n = static_cast<Eigen::Index>(witness.size());
  for (const auto& u : witness) {
    if (u.size() != g.rank()) {
      throw MalformedInputError("gram: witness vector " + to_string(u) +
                                " does not match group rank");
    }
  }
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Int k = pairing(g, witness[i], witness[j]);
      const Complex phase = std::polar(1.0, hbar * static_cast<double>(k));
      m(i, j) = phase * s.value(witness[j] - witness[i]);
    }
  }
  return analyze_gram(hbar, witness, std::move(m), tol);
}

Verdict check_psd(const PositivityReport& report, const Tolerances& tol) {
  const double herm_defect =
      report.gram.size() == 0
          ? 0.0
          : (report.gram - report.gram.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > tol.hermiticity) {
    throw MalformedMatrixError("check_psd: matrix is not Hermitian: defect " +
                               format_double(herm_defect));
  }
  if (report.eigenvalues.size() == 0) return Verdict::PSD;
  return report.eigenvalues(0) < -tol.psd ? Verdict::NOT_PSD : Verdict::PSD;
}

nlohmann::ordered_json to_json(const PositivityReport& report) {
  nlohmann::ordered_json j;
  j["hbar"] = report.hbar;
  auto witness = nlohmann::ordered_json::array();
  for (const auto& u : report.witness) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < u.size(); ++i) row.push_back(u[i]);
    witness.push_back(std::move(row));
  }
  j["witness"] = std::move(witness);
  auto matrix_part = [&](auto proj) {
    auto rows = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < report.gram.rows(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (Eigen::Index k = 0; k < report.gram.cols(); ++k) {
        row.push_back(proj(report.gram(i, k)));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["gram_re"] = matrix_part([](Complex z) { return z.real(); });
  j["gram_im"] = matrix_part([](Complex z) { return z.imag(); });
  auto evs = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < report.eigenvalues.size(); ++i) {
    evs.push_back(report.eigenvalues(i));
  }
  j["eigenvalues"] = std::move(evs);
  j["determinant"] = {{"re", report.determinant.real()},
                      {"im", report.determinant.imag()}};
  j["verdict"] = verdict_name(report.verdict);
  j["tolerance"] = report.tolerance;
  return j;
}

std::string to_canonical_text(const nlohmann::ordered_json& j) {
  return j.dump(2) + "\n";
}

}  // namespace acs
