#pragma once

#include <compare>
#include <string>

#include "towers/ff.hpp"

namespace towers {

/// A point of P^1 over a Field: (x : 1) or the point at infinity (1 : 0).
class ProjPoint {
 public:
  static ProjPoint affine(const Elem& x) { return ProjPoint(x, false); }
  static ProjPoint infinity(const Field& field) { return ProjPoint(field.zero(), true); }

  bool is_infinity() const { return inf_; }
  /// Affine coordinate; throws for the point at infinity.
  const Elem& x() const;
  const Field& field() const { return x_.field(); }

  /// Enumeration position in P^1(F): affine points by element index, then
  /// infinity at index q.
  std::uint64_t index() const { return inf_ ? x_.field().order() : x_.index(); }

  std::string label() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.inf_ == b.inf_ && a.x_ == b.x_;
  }
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    return a.index() <=> b.index();
  }

 private:
  ProjPoint(Elem x, bool inf) : x_(std::move(x)), inf_(inf) {}
  Elem x_;
  bool inf_;
};

/// All p^r + 1 points in enumeration order.
std::vector<ProjPoint> projective_line(const Field& field);

}  // namespace towers
