#pragma once

// Univariate polynomials and rational functions over a Field.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "towers/ff.hpp"

namespace towers {

/// Dense polynomial, coefficient i of x^i, leading zeros stripped. The zero
/// polynomial has no coefficients and degree -1.
class Poly {
 public:
  explicit Poly(const Field& field) : field_(&field) {}
  Poly(const Field& field, std::vector<Elem> coeffs);

  static Poly constant(const Elem& c);
  static Poly monomial(const Elem& c, std::size_t k);
  static Poly x(const Field& field);
  /// x - root.
  static Poly linear(const Elem& root);
  static Poly from_ints(const Field& field, std::span<const std::int64_t> coeffs);

  const Field& field() const { return *field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Elem>& coeffs() const { return c_; }
  /// Coefficient of x^i, zero past the degree.
  Elem coeff(std::size_t i) const;
  Elem leading() const;

  Poly monic() const;
  Elem operator()(const Elem& x) const;
  Poly derivative() const;
  /// this(inner(x)).
  Poly compose(const Poly& inner) const;
  Poly pow(unsigned e) const;
  /// x -> x^k substitution.
  Poly inflate(unsigned k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Elem& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Elem& c) { return a *= c; }
  friend Poly operator*(const Elem& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b);

  /// Integer-coefficient style printing; extension coefficients are
  /// parenthesised in "c0+c1*a" form.
  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  void check_field(const Poly& o) const;

  const Field* field_;
  std::vector<Elem> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& mod);

/// Copies a polynomial whose coefficients lie in the prime subfield into
/// another field of the same characteristic.
Poly change_field(const Poly& f, const Field& target);

struct Root {
  Elem value;
  int multiplicity;
};

/// All roots lying in f's field, with multiplicities, sorted by value.
std::vector<Root> roots_with_multiplicity(const Poly& f);
/// Same as a flat multiset.
std::vector<Elem> roots(const Poly& f);

/// Sylvester resultant of two binary forms given as coefficient vectors
/// (index i holds the coefficient of X^i Y^{d-i}) of the same formal degree.
Elem resultant(std::span<const Elem> n, std::span<const Elem> d);

/// Reduced fraction num/den with den monic and nonzero.
class RatFun {
 public:
  RatFun(Poly num, Poly den);
  explicit RatFun(Poly num);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFun pow(int e) const;
  RatFun inverse() const;

  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  friend bool operator==(const RatFun& a, const RatFun& b);

  std::string to_string(char var = 'x') const;

 private:
  Poly num_;
  Poly den_;
};

/// c with phi = c * psi when it exists.
std::optional<Elem> proportional(const RatFun& phi, const RatFun& psi);

/// phi(num/den) for a nonconstant fraction num/den.
RatFun compose(const RatFun& phi, const Poly& num, const Poly& den);

}  // namespace towers
