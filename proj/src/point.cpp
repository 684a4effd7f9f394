#include "towers/point.hpp"

#include "towers/error.hpp"

namespace towers {

const Elem& ProjPoint::x() const {
  if (inf_) throw Error(Errc::BadIndex, "the point at infinity has no affine coordinate");
  return x_;
}

std::string ProjPoint::label() const { return inf_ ? "inf" : x_.field().label(x_); }

std::vector<ProjPoint> projective_line(const Field& field) {
  std::vector<ProjPoint> out;
  out.reserve(field.order() + 1);
  for (std::uint64_t i = 0; i < field.order(); ++i) out.push_back(ProjPoint::affine(field.element(i)));
  out.push_back(ProjPoint::infinity(field));
  return out;
}

}  // namespace towers
