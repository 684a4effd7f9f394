#pragma once

// Finite fields F_p and F_{p^r} = F_p[a]/(m(a)) with m monic irreducible.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace towers {

inline constexpr unsigned kMaxExtension = 8;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// An element of a Field, stored as its canonical coefficient vector
/// c_0 + c_1 a + ... + c_{r-1} a^{r-1}. An Elem refers to its Field by
/// address, so the owning FieldPtr must outlive it.
class Elem {
 public:
  Elem() = default;

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  bool valid() const { return field_ != nullptr; }

  unsigned degree() const;
  std::uint64_t coeff(unsigned i) const { return c_[i]; }
  bool is_zero() const;
  bool is_one() const;
  bool in_prime_field() const;

  /// Position in the deterministic enumeration of the field: the
  /// base-p number c_{r-1} ... c_1 c_0.
  std::uint64_t index() const;

  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);
  Elem& operator/=(const Elem& o);
  Elem operator-() const;

  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(Elem a, const Elem& b) { return a *= b; }
  friend Elem operator/(Elem a, const Elem& b) { return a /= b; }

  Elem inverse() const;
  Elem pow(std::uint64_t e) const;
  Elem pow(const mpz_class& e) const;
  Elem frobenius() const;

  friend bool operator==(const Elem& a, const Elem& b);
  friend std::strong_ordering operator<=>(const Elem& a, const Elem& b);

 private:
  friend class Field;
  const Field* field_ = nullptr;
  std::array<std::uint32_t, kMaxExtension> c_{};
};

class Field {
 public:
  /// Builds F_{p^r}. Without a modulus and r > 1, the smallest monic
  /// irreducible of degree r is taken, ordering candidates by the base-p
  /// number c_{r-1} ... c_0 of their lower coefficients.
  static FieldPtr make(std::uint64_t p, unsigned r = 1,
                       std::optional<std::vector<std::int64_t>> modulus = std::nullopt);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint64_t p() const { return p_; }
  unsigned r() const { return r_; }
  std::uint64_t order() const { return q_; }
  bool is_prime_field() const { return r_ == 1; }
  /// Monic modulus coefficients m_0 .. m_r; empty for prime fields.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Elem zero() const;
  Elem one() const;
  Elem from_int(std::int64_t v) const;
  Elem from_coeffs(std::span<const std::int64_t> c) const;
  Elem element(std::uint64_t index) const;
  /// The class of a; for prime fields this is 0 + 1*a reduced, i.e. not
  /// meaningful, so it throws.
  Elem generator() const;

  /// All elements in index order.
  std::vector<Elem> elements() const;

  /// Image of an element of the prime subfield of another field with the
  /// same characteristic.
  Elem embed(const Elem& x) const;
  /// x itself when it already lives here, else embed(x).
  Elem coerce(const Elem& x) const { return same_as(x.field()) ? x : embed(x); }

  /// True when a generates the multiplicative group; only evaluated for
  /// r > 1 and order <= 2^20.
  bool generator_is_primitive() const { return !log_.empty(); }
  std::optional<std::uint64_t> log(const Elem& x) const;

  /// "c0+c1*a+..." form.
  std::string to_string(const Elem& x) const;
  /// "a^k" when a is primitive, the integer for prime fields, else to_string.
  std::string label(const Elem& x) const;
  std::string modulus_string() const;

  bool same_as(const Field& o) const;

  // Arithmetic kernels used by Elem.
  void add(Elem& x, const Elem& y) const;
  void sub(Elem& x, const Elem& y) const;
  void mul(Elem& x, const Elem& y) const;
  void neg(Elem& x) const;
  Elem inv(const Elem& x) const;

 private:
  Field(std::uint64_t p, unsigned r, std::vector<std::uint64_t> modulus);
  void build_log_tables();

  std::uint64_t p_;
  unsigned r_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint32_t> log_;  // indexed by Elem::index()
};

bool is_prime(std::uint64_t n);

/// Rabin-style test: gcd(x^{p^k} - x, m) = 1 for k <= deg/2.
bool is_irreducible_mod_p(std::uint64_t p, std::span<const std::uint64_t> monic);

std::vector<std::uint64_t> default_modulus(std::uint64_t p, unsigned r);

/// (a / p) computed as a^{(p-1)/2} mod p.
int legendre(std::int64_t a, std::uint64_t p);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t m);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce_mod(std::int64_t v, std::uint64_t p);

/// Symmetric residue in (-p/2, p/2].
std::int64_t signed_residue(std::uint64_t v, std::uint64_t p);

}  // namespace towers
