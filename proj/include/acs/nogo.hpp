#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acs/action.hpp"
#include "acs/surfaces.hpp"

namespace acs {

enum class Conclusion { NO_NATURAL_STATE, INCONCLUSIVE };

std::string conclusion_name(Conclusion c);

/// One forced value omega(W_vector) = value on the named surface, with the
/// pipeline stage that forced it: "sphere-pullback", "pushforward-f2" or
/// "orbit-closure".
struct ForcedConstraint {
  std::string surface;
  IntVector vector;
  Complex value;
  std::string provenance;
};

struct CertifyOptions {
  bool boundary_override = false;
  /// When set, certify scans every witness set of three distinct vectors
  /// with coordinates bounded by search_coord_bound and reports the one
  /// with the most negative eigenvalue.
  bool search_witness = false;
  Int search_coord_bound = 2;
  Tolerances tol{};
};

/// The verdict of one pipeline run: every constraint that fed the Gram
/// matrix (with provenance), the witness, the positivity report, and the
/// conclusion. NO_NATURAL_STATE exactly when the report says NOT_PSD; a
/// PSD report is INCONCLUSIVE, never an existence claim.
struct NoGoCertificate {
  double hbar = 0.0;
  std::vector<ForcedConstraint> forced_constraints;
  std::vector<IntVector> witness;
  PositivityReport report;
  Conclusion conclusion = Conclusion::INCONCLUSIVE;
};

/// Runs the full obstruction pipeline at the given hbar:
///   1. the rank-0 sphere algebra carries a unique state;
///   2. pulling it back along the cylinder embedding into the sphere
///      forces every cylinder value to 1;
///   3. pushing forward along the cylinder embedding into the torus
///      forces the torus values on Z x 0 to 1;
///   4. closing under the SL(2,Z) action extends this to every orbit
///      class that the witness needs;
///   5. the Gram matrix at the witness set is assembled and its spectrum
///      certified.
NoGoCertificate certify(double hbar, const CertifyOptions& opts = {});

struct SweepRow {
  double hbar = 0.0;
  std::optional<NoGoCertificate> certificate;
  std::string error;  // non-empty when this row failed
};

/// certify over a list of hbar values; per-row failures are recorded in
/// the row and never abort the sweep. Output order follows input order.
std::vector<SweepRow> sweep(const std::vector<double>& hbars,
                            const CertifyOptions& opts = {});

nlohmann::ordered_json to_json(const NoGoCertificate& cert);
nlohmann::ordered_json to_json(const SweepRow& row);

}  // namespace acs
