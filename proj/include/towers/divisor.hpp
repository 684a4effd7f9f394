#pragma once

// Divisors on P^1 over an explicit finite field, and the calculus linking
// them to rational maps and rational functions.

#include <map>
#include <span>
#include <vector>

#include "towers/point.hpp"
#include "towers/upoly.hpp"

namespace towers {

class RatMap;

/// Finite Z-combination of points; zero multiplicities are never stored.
class Divisor {
 public:
  explicit Divisor(const Field& field) : field_(&field) {}

  const Field& field() const { return *field_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const;
  int operator[](const ProjPoint& p) const;
  const std::map<ProjPoint, int>& terms() const { return terms_; }
  std::vector<ProjPoint> support() const;

  void add(const ProjPoint& p, int mult);

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  Divisor& operator*=(int k);

  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(int k, Divisor a) { return a *= k; }
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  const Field* field_;
  std::map<ProjPoint, int> terms_;
};

/// Sum of the distinct points of s, each with multiplicity one.
Divisor div_of_set(const Field& field, std::span<const ProjPoint> s);

/// Linear extension of m^*[P] = fiber(m, P).
Divisor pullback(const RatMap& m, const Divisor& d);

/// Sum over P in m^{-1}(s0) of (e_m(P) - 1) P.
Divisor restricted_different(const RatMap& m, std::span<const ProjPoint> s0);

/// Zeros minus poles, including the contribution at infinity.
Divisor principal_divisor(const RatFun& phi);

/// On P^1 every degree-0 divisor is principal. The result has monic
/// numerator and denominator.
RatFun divisor_to_function(const Divisor& d);

}  // namespace towers
