// Command-line front end: surface catalog queries, Weyl products, Gram
// positivity reports, the no-go certificate pipeline, and orbit
// certificates. All structured output is canonically ordered JSON.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "acs/nogo.hpp"

namespace {

acs::IntVector parse_int_vector(const std::string& text) {
  std::vector<acs::Int> coords;
  const char* ptr = text.data();
  const char* end = text.data() + text.size();
  while (ptr != end) {
    while (ptr != end && (*ptr == ' ' || *ptr == ',')) ++ptr;
    if (ptr == end) break;
    acs::Int value = 0;
    auto [next, ec] = std::from_chars(ptr, end, value);
    if (ec != std::errc{} || next == ptr) {
      throw acs::MalformedInputError("malformed integer vector: " + text);
    }
    coords.push_back(value);
    ptr = next;
  }
  acs::IntVector v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v[static_cast<Eigen::Index>(i)] = coords[i];
  return v;
}

std::vector<acs::IntVector> parse_witness(const std::string& text, Eigen::Index rank) {
  std::vector<acs::IntVector> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t sep = text.find(';', start);
    const std::string part =
        text.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
    if (!part.empty()) {
      acs::IntVector v = parse_int_vector(part);
      if (v.size() != rank) {
        throw acs::MalformedInputError("witness vector " + part +
                                       " does not match the surface rank");
      }
      out.push_back(std::move(v));
    }
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  if (out.empty()) throw acs::MalformedInputError("witness list is empty");
  return out;
}

Eigen::MatrixXd parse_mu(const std::string& text, Eigen::Index rank) {
  std::vector<std::vector<double>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t sep = text.find(';', start);
    const std::string part =
        text.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
    if (!part.empty()) {
      std::vector<double> row;
      const char* ptr = part.data();
      const char* end = part.data() + part.size();
      while (ptr != end) {
        while (ptr != end && (*ptr == ' ' || *ptr == ',')) ++ptr;
        if (ptr == end) break;
        double value = 0.0;
        auto [next, ec] = std::from_chars(ptr, end, value);
        if (ec != std::errc{} || next == ptr) {
          throw acs::MalformedInputError("malformed mu row: " + part);
        }
        row.push_back(value);
        ptr = next;
      }
      rows.push_back(std::move(row));
    }
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  if (static_cast<Eigen::Index>(rows.size()) != rank) {
    throw acs::MalformedInputError("mu must have one row per surface rank");
  }
  Eigen::MatrixXd mu(rank, rank);
  for (Eigen::Index i = 0; i < rank; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != rank) {
      throw acs::MalformedInputError("mu rows must match the surface rank");
    }
    for (Eigen::Index j = 0; j < rank; ++j) {
      mu(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return mu;
}

acs::State parse_state(const std::string& spec, const acs::WeylAlgebra& alg) {
  if (spec == "delta") return acs::State::delta(alg);
  if (spec == "allones") return acs::State::all_ones(alg);
  if (spec.rfind("gaussian:", 0) == 0) {
    return acs::State::gaussian(alg, parse_mu(spec.substr(9), alg.rank()));
  }
  throw acs::MalformedInputError("unknown state spec: " + spec +
                                 " (expected delta | gaussian:<rows> | allones)");
}

void emit(const nlohmann::ordered_json& j, const std::string& out_path) {
  const std::string text = acs::to_canonical_text(j);
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw acs::Error("cannot open output file: " + out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian Chern-Simons quantization toolkit: Weyl algebras over "
               "surface cohomology and the natural-state obstruction pipeline"};
  app.require_subcommand(1);

  acs::Tolerances tol;

  // surface info <spec>
  auto* surface_cmd = app.add_subcommand("surface", "surface catalog");
  surface_cmd->require_subcommand(1);
  auto* info_cmd = surface_cmd->add_subcommand("info", "rank and pairing matrix");
  std::string surface_spec;
  info_cmd->add_option("spec", surface_spec, "S2 | T2 | cylinder | genus=<g>,punctures=<p>")
      ->required();

  // weyl mul
  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl algebra operations");
  weyl_cmd->require_subcommand(1);
  auto* mul_cmd = weyl_cmd->add_subcommand("mul", "normal-form product of two elements");
  double mul_hbar = 1.0;
  std::string mul_surface, mul_lhs, mul_rhs;
  bool mul_override = false;
  mul_cmd->add_option("--hbar", mul_hbar)->required();
  mul_cmd->add_option("--surface", mul_surface)->required();
  mul_cmd->add_option("lhs", mul_lhs, "element, e.g. \"(1,0)*W[1,1] + (0,-1)*W[0,1]\"")
      ->required();
  mul_cmd->add_option("rhs", mul_rhs)->required();
  mul_cmd->add_flag("--boundary-override", mul_override);
  mul_cmd->add_option("--prune-tol", tol.prune, "coefficient pruning threshold");

  // state gram
  auto* state_cmd = app.add_subcommand("state", "states and positivity");
  state_cmd->require_subcommand(1);
  auto* gram_cmd = state_cmd->add_subcommand("gram", "Gram positivity report");
  double gram_hbar = 1.0;
  std::string gram_surface, gram_state, gram_witness, gram_out;
  bool gram_override = false;
  gram_cmd->add_option("--hbar", gram_hbar)->required();
  gram_cmd->add_option("--surface", gram_surface)->required();
  gram_cmd->add_option("--state", gram_state, "delta | gaussian:<rows> | allones")->required();
  gram_cmd->add_option("--witness", gram_witness, "semicolon-separated vectors, e.g. \"0,0;1,1;0,1\"")
      ->required();
  gram_cmd->add_flag("--boundary-override", gram_override);
  gram_cmd->add_option("--psd-tol", tol.psd);
  gram_cmd->add_option("--hermiticity-tol", tol.hermiticity);
  gram_cmd->add_option("--out", gram_out, "also write the JSON document here");

  // nogo certify / sweep
  auto* nogo_cmd = app.add_subcommand("nogo", "natural-state obstruction pipeline");
  nogo_cmd->require_subcommand(1);
  auto* certify_cmd = nogo_cmd->add_subcommand(
      "certify", "run the obstruction pipeline; exit 0 = NOT_PSD, 2 = INCONCLUSIVE");
  double certify_hbar = 1.0;
  bool certify_override = false, certify_search = false;
  std::string certify_out;
  certify_cmd->add_option("--hbar", certify_hbar)->required();
  certify_cmd->add_flag("--boundary-override", certify_override);
  certify_cmd->add_flag("--search-witness", certify_search,
                        "scan all witness triples with coordinates up to 2");
  certify_cmd->add_option("--out", certify_out);
  certify_cmd->add_option("--psd-tol", tol.psd);
  certify_cmd->add_option("--hermiticity-tol", tol.hermiticity);

  auto* sweep_cmd = nogo_cmd->add_subcommand("sweep", "certify over an hbar grid, one JSON row per line");
  double sweep_from = 0.0, sweep_to = 0.0;
  int sweep_steps = 0;
  bool sweep_override = false;
  sweep_cmd->add_option("--from", sweep_from)->required();
  sweep_cmd->add_option("--to", sweep_to)->required();
  sweep_cmd->add_option("--steps", sweep_steps)->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--boundary-override", sweep_override);

  // action orbit
  auto* action_cmd = app.add_subcommand("action", "symplectic action tools");
  action_cmd->require_subcommand(1);
  auto* orbit_cmd = action_cmd->add_subcommand("orbit", "SL(2,Z)-orbit certificate for a vector");
  std::string orbit_vector;
  orbit_cmd->add_option("--vector", orbit_vector, "e.g. \"4,6\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*info_cmd) {
      const acs::Surface s = acs::parse_surface(surface_spec);
      const acs::PresymplecticGroup g = acs::resolve(s);
      nlohmann::ordered_json j;
      j["name"] = s.name.empty() ? surface_spec : s.name;
      j["genus"] = s.genus;
      j["punctures"] = s.punctures;
      j["rank"] = g.rank();
      auto rows = nlohmann::ordered_json::array();
      for (Eigen::Index i = 0; i < g.rank(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (Eigen::Index k = 0; k < g.rank(); ++k) row.push_back(g.pairing()(i, k));
        rows.push_back(std::move(row));
      }
      j["pairing"] = std::move(rows);
      emit(j, "");
    } else if (*mul_cmd) {
      const acs::WeylAlgebra alg(acs::resolve(acs::parse_surface(mul_surface)), mul_hbar,
                                 mul_override);
      const acs::WeylElement product =
          acs::mul(acs::parse_element(alg, mul_lhs), acs::parse_element(alg, mul_rhs),
                   tol.prune);
      std::cout << acs::to_text(product) << "\n";
    } else if (*gram_cmd) {
      const acs::WeylAlgebra alg(acs::resolve(acs::parse_surface(gram_surface)), gram_hbar,
                                 gram_override);
      const acs::State state = parse_state(gram_state, alg);
      const auto witness = parse_witness(gram_witness, alg.rank());
      const acs::PositivityReport report = acs::gram(state, witness, tol);
      emit(acs::to_json(report), gram_out);
    } else if (*certify_cmd) {
      acs::CertifyOptions opts;
      opts.boundary_override = certify_override;
      opts.search_witness = certify_search;
      opts.tol = tol;
      const acs::NoGoCertificate cert = acs::certify(certify_hbar, opts);
      emit(acs::to_json(cert), certify_out);
      return cert.conclusion == acs::Conclusion::NO_NATURAL_STATE ? 0 : 2;
    } else if (*sweep_cmd) {
      std::vector<double> hbars;
      if (sweep_steps == 1) {
        hbars.push_back(sweep_from);
      } else {
        for (int i = 0; i < sweep_steps; ++i) {
          hbars.push_back(sweep_from +
                          (sweep_to - sweep_from) * static_cast<double>(i) /
                              static_cast<double>(sweep_steps - 1));
        }
      }
      acs::CertifyOptions opts;
      opts.boundary_override = sweep_override;
      for (const auto& row : acs::sweep(hbars, opts)) {
        std::cout << acs::to_json(row).dump() << "\n";
      }
    } else if (*orbit_cmd) {
      const acs::IntVector v = parse_int_vector(orbit_vector);
      const acs::OrbitCertificate cert = acs::orbit_member(v);
      nlohmann::ordered_json j;
      j["vector"] = {v[0], v[1]};
      j["member"] = cert.member;
      j["representative"] = {cert.representative[0], cert.representative[1]};
      j["matrix"] = {{cert.transform(0, 0), cert.transform(0, 1)},
                     {cert.transform(1, 0), cert.transform(1, 1)}};
      emit(j, "");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
