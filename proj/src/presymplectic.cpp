#include "acs/presymplectic.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace acs {

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i];
  }
  out << ')';
  return out.str();
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

PresymplecticGroup::PresymplecticGroup(IntMatrix pairing) : pairing_(std::move(pairing)) {
  if (pairing_.rows() != pairing_.cols()) {
    throw MalformedInputError("pairing matrix must be square");
  }
  for (Eigen::Index i = 0; i < pairing_.rows(); ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      if (pairing_(i, j) != -pairing_(j, i)) {
        throw MalformedInputError("pairing matrix must be antisymmetric");
      }
    }
  }
}

Int pairing(const PresymplecticGroup& g, const IntVector& u, const IntVector& v) {
  if (u.size() != g.rank() || v.size() != g.rank()) {
    throw MalformedInputError("pairing: vector length does not match group rank");
  }
  return u.dot(g.pairing() * v);
}

GroupHom::GroupHom(PresymplecticGroup source, PresymplecticGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank()) {
    throw MalformedInputError("hom matrix shape must be target.rank x source.rank");
  }
  const IntMatrix pulled = matrix_.transpose() * target_.pairing() * matrix_;
  for (Eigen::Index i = 0; i < source_.rank(); ++i) {
    for (Eigen::Index j = 0; j < source_.rank(); ++j) {
      if (pulled(i, j) != source_.pairing()(i, j)) {
        std::ostringstream msg;
        msg << "pairing compatibility violated at entry (" << i << ", " << j
            << "): M^T tau' M gives " << pulled(i, j) << ", expected "
            << source_.pairing()(i, j);
        throw PairingViolationError(msg.str(), i, j);
      }
    }
  }
}

GroupHom GroupHom::identity(const PresymplecticGroup& g) {
  return GroupHom(g, g, IntMatrix::Identity(g.rank(), g.rank()));
}

IntVector GroupHom::apply(const IntVector& u) const {
  if (u.size() != source_.rank()) {
    throw MalformedInputError("hom applied to vector of wrong rank");
  }
  return matrix_ * u;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (f.target() != g.source()) {
    throw MalformedInputError("compose: inner target group differs from outer source group");
  }
  return GroupHom(f.source(), g.target(), g.matrix() * f.matrix());
}

}  // namespace acs
