#pragma once

#include <string>
#include <string_view>

#include "acs/presymplectic.hpp"

namespace acs {

/// An oriented surface of finite type, described by genus and puncture
/// count. Compact iff punctures == 0.
struct Surface {
  int genus = 0;
  int punctures = 0;
  std::string name;

  static Surface sphere() { return {0, 0, "S2"}; }
  static Surface torus() { return {1, 0, "T2"}; }
  static Surface cylinder() { return {0, 2, "cylinder"}; }

  bool compact() const { return punctures == 0; }
};

/// First compactly supported cohomology with its intersection pairing:
/// rank 0 for the sphere, 2g for compact genus g, 2g + p - 1 with p >= 1
/// punctures. The pairing is the standard symplectic form on the first 2g
/// coordinates and zero on the puncture coordinates.
PresymplecticGroup resolve(const Surface& s);

/// Accepts "S2" | "T2" | "cylinder" | "genus=<g>,punctures=<p>".
Surface parse_surface(std::string_view spec);

/// An embedding presented by its induced pushforward on cohomology.
struct EmbeddingSpec {
  Surface source;
  Surface target;
  GroupHom hom;
};

EmbeddingSpec cyl_into_sphere();
EmbeddingSpec cyl_into_torus();

/// Torus self-embedding with pushforward matrix t; rejected with
/// NotOrientationPreservingError unless det t = 1.
EmbeddingSpec torus_auto(const IntMatrix& t);

/// Name-based lookup for the parameterless catalog entries.
EmbeddingSpec catalog_embedding(std::string_view name);

}  // namespace acs
