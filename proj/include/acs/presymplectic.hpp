#pragma once

#include "acs/types.hpp"

namespace acs {

/// A finitely generated free abelian group Z^n carrying an antisymmetric
/// integer pairing. Degenerate pairings (including tau = 0) are first-class.
/// Immutable after construction.
class PresymplecticGroup {
 public:
  /// The rank-0 group; its only element is the empty vector.
  PresymplecticGroup() : pairing_(IntMatrix::Zero(0, 0)) {}

  /// Rank is the matrix dimension. Throws MalformedInputError unless the
  /// matrix is square and antisymmetric.
  explicit PresymplecticGroup(IntMatrix pairing);

  Eigen::Index rank() const { return pairing_.rows(); }
  const IntMatrix& pairing() const { return pairing_; }

  bool operator==(const PresymplecticGroup& other) const {
    return pairing_.rows() == other.pairing_.rows() && pairing_ == other.pairing_;
  }
  bool operator!=(const PresymplecticGroup& other) const { return !(*this == other); }

 private:
  IntMatrix pairing_;
};

/// u^T tau v, exact integer arithmetic. Antisymmetric in (u, v).
Int pairing(const PresymplecticGroup& g, const IntVector& u, const IntVector& v);

/// A pairing-compatible homomorphism between presymplectic groups.
/// Compatibility M^T tau_target M = tau_source is verified eagerly at
/// construction; a violation throws PairingViolationError with the first
/// offending entry.
class GroupHom {
 public:
  GroupHom(PresymplecticGroup source, PresymplecticGroup target, IntMatrix matrix);

  static GroupHom identity(const PresymplecticGroup& g);

  const PresymplecticGroup& source() const { return source_; }
  const PresymplecticGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(const IntVector& u) const;

 private:
  PresymplecticGroup source_;
  PresymplecticGroup target_;
  IntMatrix matrix_;
};

/// g after f. Requires f.target == g.source.
GroupHom compose(const GroupHom& g, const GroupHom& f);

}  // namespace acs
