#pragma once

// Rational maps P^1 -> P^1 stored as pairs of binary forms.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "towers/divisor.hpp"
#include "towers/point.hpp"
#include "towers/upoly.hpp"

namespace towers {

/// (N : D) with N, D binary forms of formal degree d >= 1 and
/// Res(N, D) != 0, so the map has degree exactly d and is defined at every
/// point. Form coefficient i belongs to X^i Y^{d-i}. Stored scaled so that
/// the affine denominator D(x, 1) is monic.
class RatMap {
 public:
  /// Throws DegreeZero when the resultant vanishes.
  static RatMap from_forms(std::vector<Elem> num, std::vector<Elem> den);
  /// num/den is reduced first; a constant quotient throws DegreeZero.
  static RatMap from_fraction(const Poly& num, const Poly& den);
  static RatMap identity(const Field& field);

  unsigned degree() const { return static_cast<unsigned>(num_.size() - 1); }
  const Field& field() const { return num_[0].field(); }
  std::span<const Elem> num_form() const { return num_; }
  std::span<const Elem> den_form() const { return den_; }
  /// N(x, 1) and D(x, 1).
  Poly num() const;
  Poly den() const;

  ProjPoint operator()(const ProjPoint& p) const;
  ProjPoint operator()(const Elem& x) const { return (*this)(ProjPoint::affine(x)); }

  /// t1 N(x,1) - t0 D(x,1) for t = (t0 : t1): the affine part of the form
  /// whose zeros are the fiber over t.
  Poly fiber_poly(const ProjPoint& t) const;

  friend bool operator==(const RatMap& a, const RatMap& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(char var = 'x') const;

 private:
  RatMap(std::vector<Elem> num, std::vector<Elem> den);
  std::vector<Elem> num_;
  std::vector<Elem> den_;
};

/// outer o inner.
RatMap compose(const RatMap& outer, const RatMap& inner);

/// m with its coefficients carried into `target` (prime-subfield
/// coefficients only, unless m is already over target).
RatMap change_field(const RatMap& m, const Field& target);

/// phi o m as a reduced rational function.
RatFun compose(const RatFun& phi, const RatMap& m);

/// Degree-one map (a x + b) / (c x + d) with ad - bc != 0.
class Mobius {
 public:
  Mobius(const Elem& a, const Elem& b, const Elem& c, const Elem& d);
  explicit Mobius(const RatMap& m);
  static Mobius identity(const Field& field);

  const RatMap& map() const { return map_; }
  ProjPoint operator()(const ProjPoint& p) const { return map_(p); }
  Mobius inverse() const;

 private:
  RatMap map_;
};

/// sigma o m o tau.
RatMap mobius_conjugate(const RatMap& m, const Mobius& sigma, const Mobius& tau);

/// m^{-1}(t) with multiplicities; throws InsufficientField when part of the
/// fiber is not rational over the map's field.
Divisor fiber(const RatMap& m, const ProjPoint& t);

/// e_m(P): multiplicity of P in fiber(m, m(P)). Needs no rationality of the
/// rest of the fiber.
int ramification_index(const RatMap& m, const ProjPoint& p);

/// Every P with e_m(P) >= 2; throws InsufficientField when some
/// ramification point is not rational.
std::map<ProjPoint, int> ramification(const RatMap& m);

}  // namespace towers
