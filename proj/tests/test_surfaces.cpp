#include <doctest.h>

#include "acs/action.hpp"
#include "acs/surfaces.hpp"

using namespace acs;

TEST_CASE("resolve pins the three surfaces of the cylinder diagram") {
  CHECK(resolve(Surface::sphere()).rank() == 0);

  const PresymplecticGroup t2 = resolve(Surface::torus());
  REQUIRE(t2.rank() == 2);
  IntMatrix j(2, 2);
  j << 0, 1, -1, 0;
  CHECK(t2.pairing() == j);

  const PresymplecticGroup cyl = resolve(Surface::cylinder());
  REQUIRE(cyl.rank() == 1);
  CHECK(cyl.pairing()(0, 0) == 0);
}

TEST_CASE("resolve follows the punctured-surface rank formula") {
  for (int g = 0; g <= 3; ++g) {
    for (int p = 0; p <= 4; ++p) {
      const PresymplecticGroup grp = resolve(Surface{g, p, ""});
      const Eigen::Index expected =
          (g == 0 && p == 0) ? 0 : (p == 0 ? 2 * g : 2 * g + p - 1);
      CHECK(grp.rank() == expected);
      // standard symplectic blocks on the genus coordinates, zero beyond
      for (Eigen::Index i = 0; i < grp.rank(); ++i) {
        for (Eigen::Index k = 0; k < grp.rank(); ++k) {
          Int expected_entry = 0;
          if (i < 2 * g && k < 2 * g && i / 2 == k / 2) {
            if (k == i + 1 && i % 2 == 0) expected_entry = 1;
            if (k == i - 1 && i % 2 == 1) expected_entry = -1;
          }
          CHECK(grp.pairing()(i, k) == expected_entry);
        }
      }
    }
  }
}

TEST_CASE("parse_surface accepts the CLI spec grammar") {
  CHECK(resolve(parse_surface("S2")).rank() == 0);
  CHECK(resolve(parse_surface("T2")).rank() == 2);
  CHECK(resolve(parse_surface("cylinder")).rank() == 1);
  CHECK(resolve(parse_surface("genus=2,punctures=3")).rank() == 6);
  CHECK_THROWS_AS(parse_surface("klein"), MalformedInputError);
  CHECK_THROWS_AS(parse_surface("genus=2"), MalformedInputError);
}

TEST_CASE("catalog embeddings resolve to the pinned pushforwards") {
  const auto into_torus = catalog_embedding("cyl_into_torus");
  IntMatrix column(2, 1);
  column << 1, 0;
  CHECK(into_torus.hom.matrix() == column);

  const auto into_sphere = catalog_embedding("cyl_into_sphere");
  CHECK(into_sphere.hom.matrix().rows() == 0);
  CHECK(into_sphere.hom.matrix().cols() == 1);

  CHECK_THROWS_AS(catalog_embedding("moebius_strip"), MalformedInputError);
}

TEST_CASE("torus_auto accepts determinant-one matrices only") {
  CHECK_NOTHROW(torus_auto(sl2_t()));
  IntMatrix flip(2, 2);
  flip << 0, 1, 1, 0;  // det -1
  CHECK_THROWS_AS(torus_auto(flip), NotOrientationPreservingError);
  IntMatrix doubled(2, 2);
  doubled << 2, 0, 0, 1;  // det 2
  CHECK_THROWS_AS(torus_auto(doubled), NotOrientationPreservingError);
}

TEST_CASE("determinant one and pairing preservation coincide in rank 2") {
  const PresymplecticGroup t2 = resolve(Surface::torus());
  IntMatrix m(2, 2);
  for (Int a = -2; a <= 2; ++a) {
    for (Int b = -2; b <= 2; ++b) {
      for (Int c = -2; c <= 2; ++c) {
        for (Int d = -2; d <= 2; ++d) {
          m << a, b, c, d;
          const bool unimodular = (a * d - b * c) == 1;
          const bool preserves =
              (m.transpose() * t2.pairing() * m) == t2.pairing();
          CHECK(unimodular == preserves);
          bool accepted = true;
          try {
            torus_auto(m);
          } catch (const Error&) {
            accepted = false;
          }
          CHECK(accepted == unimodular);
        }
      }
    }
  }
}
