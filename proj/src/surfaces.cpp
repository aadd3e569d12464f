#include "acs/surfaces.hpp"

#include <charconv>

namespace acs {

PresymplecticGroup resolve(const Surface& s) {
  if (s.genus < 0 || s.punctures < 0) {
    throw MalformedInputError("surface needs non-negative genus and puncture count");
  }
  const Eigen::Index rank =
      s.punctures == 0 ? 2 * s.genus : 2 * s.genus + s.punctures - 1;
  IntMatrix tau = IntMatrix::Zero(rank, rank);
  for (int k = 0; k < s.genus; ++k) {
    tau(2 * k, 2 * k + 1) = 1;
    tau(2 * k + 1, 2 * k) = -1;
  }
  return PresymplecticGroup(std::move(tau));
}

namespace {

int parse_int_field(std::string_view text, std::string_view key) {
  const auto pos = text.find(key);
  if (pos == std::string_view::npos) {
    throw MalformedInputError("surface spec missing field: " + std::string(key));
  }
  const char* first = text.data() + pos + key.size();
  const char* last = text.data() + text.size();
  int value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) {
    throw MalformedInputError("surface spec has malformed value for " + std::string(key));
  }
  return value;
}

}  // namespace

Surface parse_surface(std::string_view spec) {
  if (spec == "S2") return Surface::sphere();
  if (spec == "T2") return Surface::torus();
  if (spec == "cylinder") return Surface::cylinder();
  if (spec.rfind("genus=", 0) == 0) {
    Surface s;
    s.genus = parse_int_field(spec, "genus=");
    s.punctures = parse_int_field(spec, "punctures=");
    s.name = std::string(spec);
    if (s.genus < 0 || s.punctures < 0) {
      throw MalformedInputError("surface spec needs non-negative genus and punctures");
    }
    return s;
  }
  throw MalformedInputError("unknown surface spec: " + std::string(spec));
}

EmbeddingSpec cyl_into_sphere() {
  Surface cyl = Surface::cylinder();
  Surface s2 = Surface::sphere();
  GroupHom hom(resolve(cyl), resolve(s2), IntMatrix::Zero(0, 1));
  return {cyl, s2, std::move(hom)};
}

EmbeddingSpec cyl_into_torus() {
  Surface cyl = Surface::cylinder();
  Surface t2 = Surface::torus();
  IntMatrix m(2, 1);
  m << 1, 0;
  GroupHom hom(resolve(cyl), resolve(t2), std::move(m));
  return {cyl, t2, std::move(hom)};
}

EmbeddingSpec torus_auto(const IntMatrix& t) {
  if (t.rows() != 2 || t.cols() != 2) {
    throw MalformedInputError("torus automorphism needs a 2x2 matrix");
  }
  const Int det = t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0);
  if (det != 1) {
    throw NotOrientationPreservingError(
        "torus automorphism must have determinant 1, got " + std::to_string(det));
  }
  Surface t2 = Surface::torus();
  GroupHom hom(resolve(t2), resolve(t2), t);
  return {t2, t2, std::move(hom)};
}

EmbeddingSpec catalog_embedding(std::string_view name) {
  if (name == "cyl_into_sphere") return cyl_into_sphere();
  if (name == "cyl_into_torus") return cyl_into_torus();
  throw MalformedInputError("unknown catalog embedding: " + std::string(name));
}

}  // namespace acs
