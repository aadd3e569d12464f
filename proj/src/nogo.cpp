#include "acs/nogo.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace acs {

std::string conclusion_name(Conclusion c) {
  return c == Conclusion::NO_NATURAL_STATE ? "NO_NATURAL_STATE" : "INCONCLUSIVE";
}

namespace {

IntVector vec2(Int a, Int b) {
  IntVector v(2);
  v << a, b;
  return v;
}

std::vector<IntVector> paper_witness() {
  return {vec2(0, 0), vec2(1, 1), vec2(0, 1)};
}

struct ForcedState {
  State state;
  std::vector<ForcedConstraint> constraints;
};

// Propagates the naturality constraints far enough to determine every
// pairwise witness difference, recording the provenance of each value.
ForcedState force_torus_state(const State& cylinder_state, const GroupHom& f2,
                              const WeylAlgebra& torus_alg,
                              const std::vector<IntVector>& witness) {
  std::set<IntVector, LexLess> diffs;
  for (const auto& ui : witness) {
    for (const auto& uj : witness) {
      diffs.insert(uj - ui);
    }
  }

  std::set<Int> pushforward_ns;          // torus constraints at (n, 0)
  std::set<IntVector, LexLess> closed;   // constraints forced by the orbit closure
  for (const auto& v : diffs) {
    if (v[1] == 0) {
      pushforward_ns.insert(v[0]);
    } else {
      closed.insert(v);
      pushforward_ns.insert(std::gcd(v[0], v[1]));
    }
  }
  pushforward_ns.insert(0);

  std::vector<ForcedConstraint> constraints;
  for (const Int n : pushforward_ns) {
    IntVector cyl_vec(1);
    cyl_vec << n;
    constraints.push_back({"cylinder", cyl_vec, cylinder_state.value(cyl_vec),
                           "sphere-pullback"});
  }
  StateTable table;
  for (const Int n : pushforward_ns) {
    IntVector cyl_vec(1);
    cyl_vec << n;
    const Complex val = cylinder_state.value(cyl_vec);
    const IntVector torus_vec = f2.apply(cyl_vec);
    constraints.push_back({"T2", torus_vec, val, "pushforward-f2"});
    IntVector rep = vec2(std::gcd(torus_vec[0], torus_vec[1]), 0);
    table.emplace(std::move(rep), val);
  }

  State raw = State::partial(torus_alg, std::move(table), ClosureRule::None);
  State closed_state = close_under_orbit(raw);
  for (const auto& v : closed) {
    constraints.push_back({"T2", v, closed_state.value(v), "orbit-closure"});
  }
  return {std::move(closed_state), std::move(constraints)};
}

NoGoCertificate certify_at_witness(double hbar, const CertifyOptions& opts,
                                   const std::vector<IntVector>& witness) {
  const EmbeddingSpec f1 = cyl_into_sphere();
  const EmbeddingSpec f2 = cyl_into_torus();
  const WeylAlgebra sphere_alg(resolve(f1.target), hbar, opts.boundary_override);
  const WeylAlgebra torus_alg(resolve(f2.target), hbar, opts.boundary_override);

  // The sphere algebra is C; its unique state is delta on the rank-0 group.
  const State sphere_state = State::delta(sphere_alg);
  const State cylinder_state = pull_back(sphere_state, f1.hom);

  ForcedState forced = force_torus_state(cylinder_state, f2.hom, torus_alg, witness);

  NoGoCertificate cert;
  cert.hbar = hbar;
  cert.forced_constraints = std::move(forced.constraints);
  cert.witness = witness;
  cert.report = gram(forced.state, witness, opts.tol);
  cert.conclusion = cert.report.verdict == Verdict::NOT_PSD
                        ? Conclusion::NO_NATURAL_STATE
                        : Conclusion::INCONCLUSIVE;
  return cert;
}

std::vector<IntVector> search_box(Int bound) {
  std::vector<IntVector> out;
  for (Int a = -bound; a <= bound; ++a) {
    for (Int b = -bound; b <= bound; ++b) {
      out.push_back(vec2(a, b));
    }
  }
  return out;
}

}  // namespace

NoGoCertificate certify(double hbar, const CertifyOptions& opts) {
  if (!opts.search_witness) {
    return certify_at_witness(hbar, opts, paper_witness());
  }
  const std::vector<IntVector> box = search_box(opts.search_coord_bound);
  std::optional<NoGoCertificate> best;
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (std::size_t j = i + 1; j < box.size(); ++j) {
      for (std::size_t k = j + 1; k < box.size(); ++k) {
        NoGoCertificate cand =
            certify_at_witness(hbar, opts, {box[i], box[j], box[k]});
        if (!best || cand.report.eigenvalues(0) < best->report.eigenvalues(0)) {
          best = std::move(cand);
        }
      }
    }
  }
  return *best;  // the box is never empty
}

std::vector<SweepRow> sweep(const std::vector<double>& hbars, const CertifyOptions& opts) {
  std::vector<SweepRow> rows;
  rows.reserve(hbars.size());
  for (const double h : hbars) {
    SweepRow row;
    row.hbar = h;
    try {
      row.certificate = certify(h, opts);
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

nlohmann::ordered_json vector_json(const IntVector& v) {
  auto arr = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

}  // namespace

nlohmann::ordered_json to_json(const NoGoCertificate& cert) {
  nlohmann::ordered_json j;
  j["hbar"] = cert.hbar;
  auto constraints = nlohmann::ordered_json::array();
  for (const auto& c : cert.forced_constraints) {
    nlohmann::ordered_json entry;
    entry["surface"] = c.surface;
    entry["vector"] = vector_json(c.vector);
    entry["value"] = {{"re", c.value.real()}, {"im", c.value.imag()}};
    entry["provenance"] = c.provenance;
    constraints.push_back(std::move(entry));
  }
  j["forced_constraints"] = std::move(constraints);
  auto witness = nlohmann::ordered_json::array();
  for (const auto& u : cert.witness) witness.push_back(vector_json(u));
  j["witness"] = std::move(witness);
  j["report"] = to_json(cert.report);
  j["conclusion"] = conclusion_name(cert.conclusion);
  return j;
}

nlohmann::ordered_json to_json(const SweepRow& row) {
  nlohmann::ordered_json j;
  j["hbar"] = row.hbar;
  if (!row.error.empty()) {
    j["error"] = row.error;
    return j;
  }
  const auto& cert = *row.certificate;
  j["verdict"] = verdict_name(cert.report.verdict);
  j["min_eigenvalue"] = cert.report.eigenvalues(0);
  j["determinant"] = {{"re", cert.report.determinant.real()},
                      {"im", cert.report.determinant.imag()}};
  j["conclusion"] = conclusion_name(cert.conclusion);
  return j;
}

}  // namespace acs
