// Acceptance suite: replays every advertised guarantee end to end and
// prints one pass/fail line per criterion. Returns the number of failures.

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "acs/exact.hpp"
#include "acs/nogo.hpp"
#include "generators.hpp"
#include "orbit_oracle.hpp"

using namespace acs;

namespace {

struct Criterion {
  std::string name;
  std::function<void(std::string&)> run;  // throws or appends to the detail string
};

IntVector vec2(Int a, Int b) {
  IntVector v(2);
  v << a, b;
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

struct CliResult {
  int exit_code = -1;
  std::string stdout_text;
  double seconds = 0.0;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ACS_CLI_PATH) + " " + args;
  const auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "failed to launch the CLI");
  CliResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.stdout_text.append(buf, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Eigen::MatrixXcd forced_gram(double hbar) {
  Eigen::MatrixXcd g(3, 3);
  const Complex phase = std::polar(1.0, hbar);
  g << 1, 1, 1,
       1, 1, phase,
       1, std::conj(phase), 1;
  return g;
}

// 1. theorem replay through the CLI at hbar = 1
void criterion_theorem_replay(std::string& detail) {
  const CliResult cli = run_cli("nogo certify --hbar 1.0");
  require(cli.exit_code == 0, "expected exit code 0, got " + std::to_string(cli.exit_code));
  require(cli.seconds < 1.0, "runtime " + std::to_string(cli.seconds) + "s exceeds 1s");
  const auto j = nlohmann::json::parse(cli.stdout_text);
  const auto& report = j.at("report");
  const Eigen::MatrixXcd expected = forced_gram(1.0);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      const Complex entry(report.at("gram_re")[i][k].get<double>(),
                          report.at("gram_im")[i][k].get<double>());
      require(std::abs(entry - expected(i, k)) < 1e-12,
              "gram entry off the forced matrix");
    }
  }
  require(report.at("verdict") == "NOT_PSD", "expected NOT_PSD");
  require(report.at("eigenvalues")[0].get<double>() < -1e-6,
          "least eigenvalue not below -1e-6");
  const double det_re = report.at("determinant").at("re").get<double>();
  const double det_im = report.at("determinant").at("im").get<double>();
  const double target = 2.0 * std::cos(1.0) - 2.0;
  require(std::abs(Complex(det_re, det_im) - Complex(target, 0.0)) < 1e-9,
          "determinant away from 2cos(1)-2");
  detail = "det = " + format_double(det_re) + ", min eig = " +
           format_double(report.at("eigenvalues")[0].get<double>()) +
           ", cli " + format_double(cli.seconds) + "s";
}

// 2. 64 admissible hbar values refuted; lattice boundary inconclusive
void criterion_sweep(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<double> grid;
  const double hi = 4.0 * std::numbers::pi;
  for (int i = 0; grid.size() < 64 && i < 1000; ++i) {
    const double h = 0.05 + (hi - 0.1) * static_cast<double>(i) / 200.0;
    if (h >= hi) break;
    if (distance_to_2pi_lattice(h) >= 0.05) grid.push_back(h);
  }
  require(grid.size() == 64, "failed to assemble the 64-point grid");
  const auto rows = sweep(grid);
  for (const auto& row : rows) {
    require(row.error.empty(), "sweep row failed at hbar = " + format_double(row.hbar));
    require(row.certificate->report.verdict == Verdict::NOT_PSD,
            "sweep row not refuted at hbar = " + format_double(row.hbar));
  }
  CertifyOptions opts;
  opts.boundary_override = true;
  for (const double boundary : {2.0 * std::numbers::pi, 4.0 * std::numbers::pi}) {
    const NoGoCertificate cert = certify(boundary, opts);
    require(cert.report.verdict == Verdict::PSD, "boundary hbar should be PSD");
    require(cert.conclusion == Conclusion::INCONCLUSIVE, "boundary must stay inconclusive");
    require(cert.report.eigenvalues.size() == 3, "boundary spectrum size");
    require(std::abs(cert.report.eigenvalues(0)) < 1e-9 &&
                std::abs(cert.report.eigenvalues(1)) < 1e-9 &&
                std::abs(cert.report.eigenvalues(2) - 3.0) < 1e-9,
            "boundary spectrum is not {0, 0, 3}");
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(seconds < 5.0, "runtime " + std::to_string(seconds) + "s exceeds 5s");
  detail = "64 refutations + 2 boundary checks in " + format_double(seconds) + "s";
}

// 3. algebra law suite, >= 1000 randomized cases per law
void criterion_law_suite(std::string& detail) {
  testgen::Rng rng(2026);
  int associativity = 0, commutation = 0, involution = 0, antihom = 0;
  for (int i = 0; i < 1000; ++i) {
    const PresymplecticGroup g = testgen::random_group(rng);
    const WeylAlgebra alg(g, 1.1);
    const WeylElement a = testgen::random_element(rng, alg);
    const WeylElement b = testgen::random_element(rng, alg);
    const WeylElement c = testgen::random_element(rng, alg);
    require(term_distance((a * b) * c, a * (b * c)) < 1e-9, "associativity failure");
    ++associativity;

    const IntVector u = testgen::random_vector(rng, g.rank());
    const IntVector v = testgen::random_vector(rng, g.rank());
    const Complex swap_phase =
        std::polar(1.0, -2.0 * alg.hbar() * static_cast<double>(pairing(g, u, v)));
    require(term_distance(symbol(alg, u) * symbol(alg, v),
                          swap_phase * (symbol(alg, v) * symbol(alg, u))) < 1e-9,
            "commutation failure");
    ++commutation;

    require(term_distance(star(star(a)), a) < 1e-9, "star involution failure");
    ++involution;
    require(term_distance(star(a * b), star(b) * star(a)) < 1e-9,
            "star antihomomorphism failure");
    const Complex lambda = testgen::random_coeff(rng);
    require(term_distance(star(lambda * a), std::conj(lambda) * star(a)) < 1e-9,
            "star conjugate-linearity failure");
    ++antihom;
  }
  detail = std::to_string(associativity) + "+" + std::to_string(commutation) + "+" +
           std::to_string(involution) + "+" + std::to_string(antihom) + " cases, zero failures";
}

// 4. functoriality over the embedding catalog
void criterion_functoriality(std::string& detail) {
  testgen::Rng rng(2027);
  const double hbar = 1.0;
  const WeylAlgebra sphere(resolve(Surface::sphere()), hbar);
  const WeylAlgebra cyl(resolve(Surface::cylinder()), hbar);
  const WeylAlgebra t2(resolve(Surface::torus()), hbar);
  const auto alg_of = [&](const PresymplecticGroup& g) -> const WeylAlgebra& {
    if (g == sphere.group()) return sphere;
    if (g == cyl.group()) return cyl;
    return t2;
  };

  std::vector<GroupHom> catalog = {
      GroupHom::identity(sphere.group()), GroupHom::identity(cyl.group()),
      GroupHom::identity(t2.group()),     cyl_into_sphere().hom,
      cyl_into_torus().hom,               torus_auto(sl2_s()).hom,
      torus_auto(sl2_t()).hom,            torus_auto(sl2_t() * sl2_s()).hom};

  // exact integer pairing compatibility for every catalog hom
  for (const auto& hom : catalog) {
    require(hom.matrix().transpose() * hom.target().pairing() * hom.matrix() ==
                hom.source().pairing(),
            "pairing compatibility violated in the catalog");
  }

  // identity law on 100 random elements per object
  for (const auto* alg : {&sphere, &cyl, &t2}) {
    const AlgebraHom id = induced_hom(GroupHom::identity(alg->group()), *alg, *alg);
    for (int i = 0; i < 100; ++i) {
      const WeylElement a = testgen::random_element(rng, *alg);
      require(term_distance(id(a), a) == 0.0, "identity law failure");
    }
  }

  // composition law on every composable pair
  int pairs = 0;
  for (const auto& f : catalog) {
    for (const auto& g : catalog) {
      if (f.target() != g.source()) continue;
      const AlgebraHom first = induced_hom(f, alg_of(f.source()), alg_of(f.target()));
      const AlgebraHom second = induced_hom(g, alg_of(g.source()), alg_of(g.target()));
      const AlgebraHom composite =
          induced_hom(compose(g, f), alg_of(f.source()), alg_of(g.target()));
      for (int i = 0; i < 100; ++i) {
        const WeylElement a = testgen::random_element(rng, alg_of(f.source()));
        require(term_distance(composite(a), second(first(a))) < 1e-12,
                "composition law failure");
      }
      ++pairs;
    }
  }
  detail = std::to_string(pairs) + " composable pairs, 100 elements each";
}

// 5. isotony violation witness, exact
void criterion_isotony(std::string& detail) {
  const WeylAlgebra cyl(resolve(Surface::cylinder()), 1.0);
  const WeylAlgebra sphere(resolve(Surface::sphere()), 1.0);
  const AlgebraHom collapse = induced_hom(cyl_into_sphere().hom, cyl, sphere);
  IntVector one(1);
  one << 1;
  const WeylElement witness = symbol(cyl, one) - unit(cyl);
  require(!witness.is_zero(), "witness degenerated to zero");
  require(collapse(witness).is_zero(), "collapse failed to kill the witness");
  detail = "A(f1)(W_1 - 1) = 0 with W_1 - 1 != 0";
}

// 6. the delta state is positive and invariant
void criterion_invariant_state(std::string& detail) {
  testgen::Rng rng(2028);
  for (int trial = 0; trial < 200; ++trial) {
    const PresymplecticGroup g = testgen::random_group(rng);
    const WeylAlgebra alg(g, 1.0);
    std::set<IntVector, LexLess> witness_set;
    std::uniform_int_distribution<int> size_dist(1, 8);
    const int size = size_dist(rng);
    while (static_cast<int>(witness_set.size()) < size) {
      witness_set.insert(testgen::random_vector(rng, g.rank()));
    }
    const std::vector<IntVector> witness(witness_set.begin(), witness_set.end());
    const PositivityReport report = gram(State::delta(alg), witness);
    require(report.gram ==
                Eigen::MatrixXcd::Identity(report.gram.rows(), report.gram.cols()),
            "delta gram is not the exact identity");
    require(report.verdict == Verdict::PSD, "delta gram not PSD");
  }
  const PresymplecticGroup t2 = standard_symplectic_rank2();
  const WeylAlgebra alg(t2, 1.0);
  const std::vector<SymplecticElement> gens = {SymplecticElement(t2, sl2_s()),
                                               SymplecticElement(t2, sl2_t())};
  require(invariance_check(State::delta(alg), gens, 10).invariant,
          "delta state not invariant at radius 10");
  detail = "200 identity grams, invariance radius 10 under S and T";
}

// 7. no invariant gaussian: the shear witness
void criterion_gaussian_witness(std::string& detail) {
  const auto witness = gaussian_witness(Eigen::MatrixXd::Identity(2, 2), 2);
  require(witness.has_value(), "no witness found");
  require(witness->word_matrix == sl2_t(), "expected the shear T");
  require(witness->vector == vec2(0, 1), "expected the witness vector (0,1)");
  require(std::abs(witness->mu_before - 1.0) == 0.0, "mu(u,u) must be 1");
  require(std::abs(witness->mu_after - 2.0) == 0.0, "mu(Wu,Wu) must be 2");
  detail = "W = T, u = (0,1), mu stretches 1 -> 2";
}

// 8. gcd orbit criterion against breadth-first word enumeration, depth 12
void criterion_orbit_oracle(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<testoracle::Vec2> base;
  for (Int n = -10; n <= 10; ++n) base.emplace_back(n, 0);
  const auto reached = testoracle::orbit_reachable(base, 12, 16, 64);
  int checked = 0;
  for (Int a = -10; a <= 10; ++a) {
    for (Int b = -10; b <= 10; ++b) {
      const IntVector v = vec2(a, b);
      const OrbitCertificate cert = orbit_member(v);
      require(cert.member, "gcd criterion void");
      require(reached.count({a, b}) == 1,
              "word enumeration missed (" + std::to_string(a) + "," + std::to_string(b) + ")");
      require(cert.transform * cert.representative == v,
              "realizing matrix does not reach the vector");
      ++checked;
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(seconds < 10.0, "runtime " + std::to_string(seconds) + "s exceeds 10s");
  detail = std::to_string(checked) + " vectors, BFS depth 12, " + format_double(seconds) + "s";
}

// 9. exact-mode cross-validation at hbar = pi/2
void criterion_exact_mode(std::string& detail) {
  const PresymplecticGroup t2 = resolve(Surface::torus());
  const RationalHbar rational{1, 4};
  const WeylAlgebra alg(t2, rational.to_double());
  testgen::Rng rng(2029);
  std::uniform_int_distribution<Int> coeff_dist(-2, 2);
  std::uniform_int_distribution<int> count_dist(1, 3);
  const auto random_exact = [&]() {
    ExactWeylElement e(t2, rational);
    const int count = count_dist(rng);
    for (int k = 0; k < count; ++k) {
      e.add_term(testgen::random_vector(rng, 2, 3),
                 Cyclotomic::constant(4, {coeff_dist(rng), coeff_dist(rng)}));
    }
    return e;
  };
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const ExactWeylElement ea = random_exact();
    const ExactWeylElement eb = random_exact();
    const WeylElement floating = ea.to_floating(alg) * eb.to_floating(alg);
    const WeylElement exact = exact_mul(ea, eb).to_floating(alg);
    const double d = term_distance(floating, exact);
    worst = std::max(worst, d);
    require(d < 1e-12, "floating and exact paths diverged");
  }
  detail = "100 product pairs, worst deviation " + format_double(worst);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"theorem replay (nogo certify --hbar 1.0)", criterion_theorem_replay},
      {"hbar sweep with boundary checks", criterion_sweep},
      {"Weyl algebra law suite", criterion_law_suite},
      {"functoriality over the catalog", criterion_functoriality},
      {"isotony violation witness", criterion_isotony},
      {"invariant delta state", criterion_invariant_state},
      {"gaussian noninvariance witness", criterion_gaussian_witness},
      {"orbit oracle equivalence", criterion_orbit_oracle},
      {"exact-mode cross-validation", criterion_exact_mode},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    try {
      criteria[i].run(detail);
      std::cout << "[PASS] criterion " << (i + 1) << ": " << criteria[i].name;
      if (!detail.empty()) std::cout << " (" << detail << ")";
      std::cout << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] criterion " << (i + 1) << ": " << criteria[i].name << " — "
                << e.what() << "\n";
    }
  }
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
  }
  return failures;
}
