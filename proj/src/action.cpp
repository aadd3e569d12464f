#include "acs/action.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace acs {

SymplecticElement::SymplecticElement(PresymplecticGroup group, IntMatrix matrix)
    : group_(std::move(group)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != group_.rank() || matrix_.cols() != group_.rank()) {
    throw MalformedInputError("symplectic element must be square of the group rank");
  }
  const IntMatrix pulled = matrix_.transpose() * group_.pairing() * matrix_;
  for (Eigen::Index i = 0; i < group_.rank(); ++i) {
    for (Eigen::Index j = 0; j < group_.rank(); ++j) {
      if (pulled(i, j) != group_.pairing()(i, j)) {
        throw PairingViolationError("matrix does not preserve the pairing at entry (" +
                                        std::to_string(i) + ", " + std::to_string(j) + ")",
                                    i, j);
      }
    }
  }
}

PresymplecticGroup standard_symplectic_rank2() {
  IntMatrix tau(2, 2);
  tau << 0, 1, -1, 0;
  return PresymplecticGroup(std::move(tau));
}

IntMatrix sl2_s() {
  IntMatrix s(2, 2);
  s << 0, -1, 1, 0;
  return s;
}

IntMatrix sl2_t() {
  IntMatrix t(2, 2);
  t << 1, 1, 0, 1;
  return t;
}

WeylElement act(const SymplecticElement& t, const WeylElement& a) {
  if (t.group() != a.algebra().group()) {
    throw AlgebraMismatchError("act: symplectic element and element group differ");
  }
  TermMap terms;
  for (const auto& [u, c] : a.terms()) {
    terms.emplace(t.matrix() * u, c);
  }
  return WeylElement(a.algebra(), std::move(terms), 0.0);
}

namespace {

// g = s*a + t*b with g = gcd(a, b) >= 0 when (a, b) != (0, 0)
struct Egcd {
  Int g, s, t;
};

Egcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    std::tie(old_r, r) = std::pair<Int, Int>(r, old_r - q * r);
    std::tie(old_s, s) = std::pair<Int, Int>(s, old_s - q * s);
    std::tie(old_t, t) = std::pair<Int, Int>(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Int floor_mod(Int x, Int m) {
  const Int r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

OrbitCertificate orbit_member(const IntVector& v) {
  if (v.size() != 2) {
    throw UnsupportedRankError("orbit machinery covers rank-2 vectors only");
  }
  OrbitCertificate cert;
  cert.member = true;
  const Int d = std::gcd(v[0], v[1]);
  cert.representative = IntVector(2);
  cert.representative << d, 0;
  IntMatrix t(2, 2);
  if (d == 0) {
    t = IntMatrix::Identity(2, 2);
  } else {
    const Int p = v[0] / d;
    const Int q = v[1] / d;
    Int x = 0, y = 0;
    if (q == 0) {
      // p = +-1; diag(p, p) has determinant 1 either way
      x = 0;
      y = p;
    } else if (p == 0) {
      x = -q;
      y = 0;
    } else {
      // p*y - q*x = 1; shift x into [0, |p|) for a canonical choice
      const Egcd e = extended_gcd(p, q);
      Int x0 = -e.t;
      Int y0 = e.s;
      x = floor_mod(x0, std::abs(p));
      const Int k = (x - x0) / p;
      y = y0 + k * q;
    }
    t << p, x, q, y;
  }
  assert(t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0) == 1);
  assert(t(0, 0) * d == v[0] && t(1, 0) * d == v[1]);
  cert.transform = std::move(t);
  return cert;
}

State close_under_orbit(const State& s) {
  if (s.kind() != State::Kind::Partial) {
    throw MalformedInputError("close_under_orbit expects a Partial state");
  }
  if (s.algebra().group() != standard_symplectic_rank2()) {
    throw UnsupportedRankError(
        "close_under_orbit is defined on the rank-2 standard symplectic group");
  }
  StateTable closed;
  std::map<IntVector, IntVector, LexLess> class_witness;
  for (const auto& [v, val] : s.table()) {
    IntVector rep(2);
    rep << std::gcd(v[0], v[1]), 0;
    const auto it = closed.find(rep);
    if (it == closed.end()) {
      closed.emplace(rep, val);
      class_witness.emplace(rep, v);
    } else if (std::abs(it->second - val) > 1e-12) {
      throw OrbitInconsistencyError(
          "orbit closure is inconsistent: " + to_string(class_witness.at(rep)) +
              " and " + to_string(v) + " share an orbit class but carry different values",
          class_witness.at(rep), v);
    }
  }
  return State::partial(s.algebra(), std::move(closed), ClosureRule::GcdOrbit);
}

namespace {

// All vectors with coordinates in [-radius, radius], ordered by L1 norm,
// then sign-canonical representatives (first nonzero coordinate positive)
// ahead of their negatives, then lexicographically.
std::vector<IntVector> enumeration_box(Eigen::Index rank, Int radius) {
  std::vector<IntVector> out;
  IntVector current(rank);
  const auto fill = [&](auto&& self, Eigen::Index pos) -> void {
    if (pos == rank) {
      out.push_back(current);
      return;
    }
    for (Int c = -radius; c <= radius; ++c) {
      current[pos] = c;
      self(self, pos + 1);
    }
  };
  fill(fill, 0);
  const auto sign_key = [](const IntVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v[i] != 0) return v[i] < 0 ? 1 : 0;
    }
    return 0;
  };
  std::stable_sort(out.begin(), out.end(), [&](const IntVector& a, const IntVector& b) {
    const Int na = a.cwiseAbs().sum();
    const Int nb = b.cwiseAbs().sum();
    if (na != nb) return na < nb;
    const int sa = sign_key(a);
    const int sb = sign_key(b);
    if (sa != sb) return sa < sb;
    return LexLess{}(a, b);
  });
  return out;
}

}  // namespace

InvarianceReport invariance_check(const State& s,
                                  const std::vector<SymplecticElement>& generators,
                                  Int radius, double tol) {
  const Eigen::Index rank = s.algebra().rank();
  for (const auto& gen : generators) {
    if (gen.group() != s.algebra().group()) {
      throw AlgebraMismatchError("invariance_check: generator group differs from state group");
    }
  }
  for (const auto& u : enumeration_box(rank, radius)) {
    for (const auto& gen : generators) {
      const Complex lhs = s.value(gen.matrix() * u);
      const Complex rhs = s.value(u);
      if (std::abs(lhs - rhs) > tol) {
        return {false, u, gen.matrix()};
      }
    }
  }
  return {true, std::nullopt, std::nullopt};
}

std::optional<GaussianWitness> gaussian_witness(const Eigen::MatrixXd& mu,
                                                int max_word_length, double tol) {
  if (mu.rows() != 2 || mu.cols() != 2) {
    throw UnsupportedRankError("gaussian_witness works on the rank-2 group");
  }
  if ((mu - mu.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw MalformedInputError("gaussian_witness: mu must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mu, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) <= tol) {
    throw MalformedInputError("gaussian_witness: mu must be positive-definite");
  }

  constexpr Int kEntryBound = 1000000;  // keeps the enumeration finite
  const IntMatrix gens[2] = {sl2_s(), sl2_t()};
  const char letters[2] = {'S', 'T'};
  std::set<std::array<Int, 4>, std::less<>> seen;

  std::vector<std::pair<IntMatrix, std::string>> frontier;
  frontier.emplace_back(IntMatrix::Identity(2, 2), "");

  const auto probe = [&](const IntMatrix& w,
                         const std::string& word) -> std::optional<GaussianWitness> {
    const Eigen::MatrixXd wd = w.cast<double>();
    const Eigen::MatrixXd delta = wd.transpose() * mu * wd - mu;
    if (delta.cwiseAbs().maxCoeff() <= tol) return std::nullopt;
    for (const auto& u : enumeration_box(2, 4)) {
      const Eigen::VectorXd x = u.cast<double>();
      if (std::abs(x.dot(delta * x)) > tol) {
        GaussianWitness witness;
        witness.word_matrix = w;
        witness.word = word;
        witness.vector = u;
        witness.mu_before = x.dot(mu * x);
        const Eigen::VectorXd wx = wd * x;
        witness.mu_after = wx.dot(mu * wx);
        return witness;
      }
    }
    return std::nullopt;
  };

  for (int len = 1; len <= max_word_length; ++len) {
    std::vector<std::pair<IntMatrix, std::string>> next;
    for (const auto& [w, word] : frontier) {
      for (int i = 0; i < 2; ++i) {
        IntMatrix extended = w * gens[i];
        if (extended.cwiseAbs().maxCoeff() > kEntryBound) continue;
        const std::array<Int, 4> key = {extended(0, 0), extended(0, 1),
                                        extended(1, 0), extended(1, 1)};
        const std::string next_word = word + letters[i];
        if (seen.insert(key).second) {
          if (auto hit = probe(extended, next_word)) return hit;
        }
        next.emplace_back(std::move(extended), next_word);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace acs
