#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acs/states.hpp"

namespace acs {

/// An element of Sp(Z^n, tau): an integer matrix with T^t tau T = tau,
/// verified exactly at construction. On the rank-2 standard symplectic
/// group this is the same as det T = 1.
class SymplecticElement {
 public:
  SymplecticElement(PresymplecticGroup group, IntMatrix matrix);

  const PresymplecticGroup& group() const { return group_; }
  const IntMatrix& matrix() const { return matrix_; }

 private:
  PresymplecticGroup group_;
  IntMatrix matrix_;
};

/// Z^2 with the standard symplectic form [[0,1],[-1,0]].
PresymplecticGroup standard_symplectic_rank2();

/// The generators S = [[0,-1],[1,0]] and T = [[1,1],[0,1]] of SL(2,Z).
IntMatrix sl2_s();
IntMatrix sl2_t();

/// The *-automorphism kappa_T: each term key u is replaced by T u,
/// coefficients untouched.
WeylElement act(const SymplecticElement& t, const WeylElement& a);

/// Membership certificate for the SL(2,Z)-orbit of Z x 0 in Z^2: the
/// orbit class of v is its coordinate gcd, the representative is (d, 0),
/// and transform realizes v = transform * (d, 0). The transform is built
/// by extended-Euclid column reduction and canonicalized so the result is
/// deterministic.
struct OrbitCertificate {
  bool member = false;
  IntVector representative;
  IntMatrix transform;
};

/// Rank-2 standard-symplectic vectors only; other ranks throw
/// UnsupportedRankError.
OrbitCertificate orbit_member(const IntVector& v);

/// Extends a Partial state on the rank-2 standard group to its gcd-orbit
/// closure: afterwards value(v) = table value at (gcd(v), 0). Two table
/// entries in one orbit class with different values throw
/// OrbitInconsistencyError naming both.
State close_under_orbit(const State& s);

struct InvarianceReport {
  bool invariant = true;
  std::optional<IntVector> counterexample;
  std::optional<IntMatrix> generator;
};

/// Checks value(T u) = value(u) for each generator and every u with
/// coordinates bounded by radius. Vectors are visited by increasing L1
/// norm (sign-canonical representatives first within a shell), so the
/// reported counterexample is deterministic.
InvarianceReport invariance_check(const State& s,
                                  const std::vector<SymplecticElement>& generators,
                                  Int radius, double tol = 1e-12);

struct GaussianWitness {
  IntMatrix word_matrix;
  std::string word;      // letters drawn from {S, T}
  IntVector vector;
  double mu_before = 0.0;  // mu(u, u)
  double mu_after = 0.0;   // mu(Wu, Wu)
};

/// Searches words in S and T up to the given length for a pair (W, u)
/// with mu(Wu, Wu) != mu(u, u); the first hit in (length, lexicographic)
/// word order is returned. mu must be symmetric positive-definite.
/// Exhaustion returns nullopt; callers treat that as a logged finding.
std::optional<GaussianWitness> gaussian_witness(const Eigen::MatrixXd& mu,
                                                int max_word_length,
                                                double tol = kDefaultTolerances.psd);

}  // namespace acs
