#include "towers/ff.hpp"

#include <algorithm>
#include <limits>

#include "towers/error.hpp"

namespace towers {

namespace {

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m for monic m, coefficients already reduced mod p.
void reduce_poly(Coeffs& a, const Coeffs& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  trim(a);
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i < dm; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    a.pop_back();
    trim(a);
  }
}

Coeffs mul_mod_poly(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  reduce_poly(out, m, p);
  return out;
}

Coeffs pow_mod_poly(Coeffs base, std::uint64_t e, const Coeffs& m, std::uint64_t p) {
  Coeffs acc{1};
  reduce_poly(base, m, p);
  while (e > 0) {
    if (e & 1) acc = mul_mod_poly(acc, base, m, p);
    e >>= 1;
    if (e > 0) base = mul_mod_poly(base, base, m, p);
  }
  return acc;
}

Coeffs gcd_poly(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = mod_inverse(b.back(), p);
    Coeffs monic_b = b;
    for (auto& c : monic_b) c = c * inv % p;
    reduce_poly(a, monic_b, p);
    std::swap(a, b);
  }
  return a;
}

std::uint64_t checked_order(std::uint64_t p, unsigned r) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) {
      throw Error(Errc::FieldTooLarge, "p^r must stay below 2^62");
    }
    q *= p;
  }
  return q;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) acc = static_cast<std::uint64_t>(static_cast<unsigned __int128>(acc) * base % m);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % m);
    e >>= 1;
  }
  return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  if (new_r == 0) throw Error(Errc::DivisionByZero, "inverse of 0");
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mod(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

std::int64_t signed_residue(std::uint64_t v, std::uint64_t p) {
  v %= p;
  return v > p / 2 ? static_cast<std::int64_t>(v) - static_cast<std::int64_t>(p)
                   : static_cast<std::int64_t>(v);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::uint64_t p, std::span<const std::uint64_t> monic) {
  const Coeffs m(monic.begin(), monic.end());
  const std::size_t deg = m.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  Coeffs h{0, 1};
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    h = pow_mod_poly(h, p, m, p);
    Coeffs diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    const Coeffs g = gcd_poly(m, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> default_modulus(std::uint64_t p, unsigned r) {
  const std::uint64_t count = checked_order(p, r);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Coeffs m(r + 1, 0);
    std::uint64_t v = idx;
    for (unsigned i = 0; i < r; ++i) {
      m[i] = v % p;
      v /= p;
    }
    m[r] = 1;
    if (m[0] == 0) continue;
    if (is_irreducible_mod_p(p, m)) return m;
  }
  throw Error(Errc::ReducibleModulus, "no irreducible polynomial found");
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw Error(Errc::EvenOrCompositeP, "legendre symbol needs an odd prime, got " + std::to_string(p));
  }
  const std::uint64_t v = mod_pow(reduce_mod(a, p), (p - 1) / 2, p);
  if (v == 0) return 0;
  return v == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------

FieldPtr Field::make(std::uint64_t p, unsigned r, std::optional<std::vector<std::int64_t>> modulus) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    throw Error(Errc::CompositeP, std::to_string(p) + " is not a prime below 2^31");
  }
  if (r < 1 || r > kMaxExtension) {
    throw Error(Errc::DegreeMismatch, "extension degree must be in [1, 8]");
  }
  checked_order(p, r);
  Coeffs m;
  if (modulus) {
    if (modulus->size() != r + 1) {
      throw Error(Errc::DegreeMismatch, "modulus degree differs from r");
    }
    for (auto c : *modulus) m.push_back(reduce_mod(c, p));
    if (m.back() != 1) throw Error(Errc::DegreeMismatch, "modulus must be monic");
    if (!is_irreducible_mod_p(p, m)) throw Error(Errc::ReducibleModulus, "modulus is reducible");
    if (r == 1) m.clear();
  } else if (r > 1) {
    m = default_modulus(p, r);
  }
  return FieldPtr(new Field(p, r, std::move(m)));
}

Field::Field(std::uint64_t p, unsigned r, std::vector<std::uint64_t> modulus)
    : p_(p), r_(r), q_(checked_order(p, r)), modulus_(std::move(modulus)) {
  if (r_ > 1 && q_ <= (std::uint64_t{1} << 20)) build_log_tables();
}

void Field::build_log_tables() {
  // a is primitive iff a^{(q-1)/l} != 1 for every prime l | q-1.
  const Elem a = generator();
  for (auto l : prime_factors(q_ - 1)) {
    if (a.pow((q_ - 1) / l).is_one()) return;
  }
  log_.assign(q_, 0);
  Elem x = one();
  for (std::uint64_t k = 0; k + 1 < q_; ++k) {
    log_[x.index()] = static_cast<std::uint32_t>(k);
    x *= a;
  }
}

Elem Field::zero() const {
  Elem e;
  e.field_ = this;
  return e;
}

Elem Field::one() const {
  Elem e = zero();
  e.c_[0] = 1 % p_;
  return e;
}

Elem Field::from_int(std::int64_t v) const {
  Elem e = zero();
  e.c_[0] = static_cast<std::uint32_t>(reduce_mod(v, p_));
  return e;
}

Elem Field::from_coeffs(std::span<const std::int64_t> c) const {
  Elem e = zero();
  // Reduce through the modulus so callers may pass longer vectors.
  Coeffs full;
  for (auto v : c) full.push_back(reduce_mod(v, p_));
  if (r_ > 1) {
    reduce_poly(full, modulus_, p_);
  } else if (full.size() > 1) {
    throw Error(Errc::DegreeMismatch, "prime field element takes one coefficient");
  }
  for (std::size_t i = 0; i < full.size(); ++i) e.c_[i] = static_cast<std::uint32_t>(full[i]);
  return e;
}

Elem Field::element(std::uint64_t index) const {
  if (index >= q_) throw Error(Errc::BadIndex, "element index out of range");
  Elem e = zero();
  for (unsigned i = 0; i < r_; ++i) {
    e.c_[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

Elem Field::generator() const {
  if (r_ == 1) throw Error(Errc::DegreeMismatch, "prime field has no adjoined generator");
  Elem e = zero();
  e.c_[1] = 1;
  return e;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(element(i));
  return out;
}

Elem Field::embed(const Elem& x) const {
  if (x.field().p() != p_) throw Error(Errc::FieldMismatch, "characteristics differ");
  if (!x.in_prime_field()) {
    throw Error(Errc::FieldMismatch, "element is not in the prime subfield");
  }
  Elem e = zero();
  e.c_[0] = x.c_[0];
  return e;
}

std::optional<std::uint64_t> Field::log(const Elem& x) const {
  if (log_.empty() || x.is_zero()) return std::nullopt;
  return log_[x.index()];
}

std::string Field::to_string(const Elem& x) const {
  std::string out;
  for (unsigned i = 0; i < r_; ++i) {
    const auto c = x.c_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string Field::label(const Elem& x) const {
  if (r_ == 1) return std::to_string(x.c_[0]);
  if (x.is_zero()) return "0";
  if (auto k = log(x)) {
    if (*k == 0) return "1";
    if (*k == 1) return "a";
    return "a^" + std::to_string(*k);
  }
  return to_string(x);
}

std::string Field::modulus_string() const {
  if (modulus_.empty()) return "";
  std::string out;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const std::int64_t c = signed_residue(modulus_[i], p_);
    if (c == 0) continue;
    const std::uint64_t mag = static_cast<std::uint64_t>(c < 0 ? -c : c);
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    if (i == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

bool Field::same_as(const Field& o) const {
  return this == &o || (p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_);
}

void Field::add(Elem& x, const Elem& y) const {
  for (unsigned i = 0; i < r_; ++i) {
    std::uint64_t s = std::uint64_t{x.c_[i]} + y.c_[i];
    if (s >= p_) s -= p_;
    x.c_[i] = static_cast<std::uint32_t>(s);
  }
}

void Field::sub(Elem& x, const Elem& y) const {
  for (unsigned i = 0; i < r_; ++i) {
    std::uint64_t s = std::uint64_t{x.c_[i]} + p_ - y.c_[i];
    if (s >= p_) s -= p_;
    x.c_[i] = static_cast<std::uint32_t>(s);
  }
}

void Field::neg(Elem& x) const {
  for (unsigned i = 0; i < r_; ++i) {
    x.c_[i] = x.c_[i] == 0 ? 0 : static_cast<std::uint32_t>(p_ - x.c_[i]);
  }
}

void Field::mul(Elem& x, const Elem& y) const {
  if (r_ == 1) {
    x.c_[0] = static_cast<std::uint32_t>(std::uint64_t{x.c_[0]} * y.c_[0] % p_);
    return;
  }
  std::array<std::uint64_t, 2 * kMaxExtension> prod{};
  for (unsigned i = 0; i < r_; ++i) {
    if (x.c_[i] == 0) continue;
    for (unsigned j = 0; j < r_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{x.c_[i]} * y.c_[j]) % p_;
    }
  }
  for (unsigned k = 2 * r_ - 2; k >= r_; --k) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    for (unsigned i = 0; i < r_; ++i) {
      prod[k - r_ + i] = (prod[k - r_ + i] + (p_ - lead) * modulus_[i]) % p_;
    }
  }
  for (unsigned i = 0; i < r_; ++i) x.c_[i] = static_cast<std::uint32_t>(prod[i]);
}

Elem Field::inv(const Elem& x) const {
  if (x.is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0");
  if (r_ == 1) {
    Elem e = zero();
    e.c_[0] = static_cast<std::uint32_t>(mod_inverse(x.c_[0], p_));
    return e;
  }
  return x.pow(q_ - 2);
}

// ---------------------------------------------------------------------------

namespace {

void require_same(const Elem& a, const Elem& b) {
  if (a.field_ptr() != b.field_ptr() &&
      (!a.valid() || !b.valid() || !a.field().same_as(b.field()))) {
    throw Error(Errc::FieldMismatch, "operands live in different fields");
  }
}

}  // namespace

unsigned Elem::degree() const { return field_->r(); }

bool Elem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](auto c) { return c == 0; });
}

bool Elem::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](auto c) { return c == 0; });
}

bool Elem::in_prime_field() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](auto c) { return c == 0; });
}

std::uint64_t Elem::index() const {
  std::uint64_t v = 0;
  const std::uint64_t p = field_->p();
  for (unsigned i = field_->r(); i-- > 0;) v = v * p + c_[i];
  return v;
}

Elem& Elem::operator+=(const Elem& o) {
  require_same(*this, o);
  field_->add(*this, o);
  return *this;
}

Elem& Elem::operator-=(const Elem& o) {
  require_same(*this, o);
  field_->sub(*this, o);
  return *this;
}

Elem& Elem::operator*=(const Elem& o) {
  require_same(*this, o);
  field_->mul(*this, o);
  return *this;
}

Elem& Elem::operator/=(const Elem& o) {
  require_same(*this, o);
  field_->mul(*this, field_->inv(o));
  return *this;
}

Elem Elem::operator-() const {
  Elem e = *this;
  field_->neg(e);
  return e;
}

Elem Elem::inverse() const { return field_->inv(*this); }

Elem Elem::pow(std::uint64_t e) const {
  Elem acc = field_->one();
  Elem base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

Elem Elem::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  Elem acc = field_->one();
  Elem base = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc *= acc;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc *= base;
  }
  return acc;
}

Elem Elem::frobenius() const { return pow(field_->p()); }

bool operator==(const Elem& a, const Elem& b) {
  if (a.field_ != b.field_) {
    if (!a.valid() || !b.valid() || !a.field().same_as(b.field())) return false;
  }
  return a.c_ == b.c_;
}

std::strong_ordering operator<=>(const Elem& a, const Elem& b) {
  return a.index() <=> b.index();
}

}  // namespace towers
