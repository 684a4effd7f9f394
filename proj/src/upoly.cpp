#include "towers/upoly.hpp"

#include <algorithm>

#include "towers/error.hpp"

namespace towers {

Poly::Poly(const Field& field, std::vector<Elem> coeffs) : field_(&field), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!c.field().same_as(field)) throw Error(Errc::FieldMismatch, "coefficient from another field");
  }
  normalize();
}

Poly Poly::constant(const Elem& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Elem& c, std::size_t k) {
  std::vector<Elem> v(k + 1, c.field().zero());
  v[k] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::x(const Field& field) { return monomial(field.one(), 1); }

Poly Poly::linear(const Elem& root) { return Poly(root.field(), {-root, root.field().one()}); }

Poly Poly::from_ints(const Field& field, std::span<const std::int64_t> coeffs) {
  std::vector<Elem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field.from_int(c));
  return Poly(field, std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_field(const Poly& o) const {
  if (!field_->same_as(*o.field_)) throw Error(Errc::FieldMismatch, "polynomials over different fields");
}

Elem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

Elem Poly::leading() const { return c_.empty() ? field_->zero() : c_.back(); }

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this * leading().inverse();
}

Elem Poly::operator()(const Elem& x) const {
  Elem acc = field_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Elem> v;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    v.push_back(c_[i] * field_->from_int(static_cast<std::int64_t>(i % field_->p())));
  }
  return Poly(*field_, std::move(v));
}

Poly Poly::compose(const Poly& inner) const {
  check_field(inner);
  Poly acc(*field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly acc = constant(field_->one());
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return acc;
}

Poly Poly::inflate(unsigned k) const {
  if (c_.empty()) return *this;
  std::vector<Elem> v((c_.size() - 1) * k + 1, field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return Poly(*field_, std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  check_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_field(b);
  if (a.c_.empty() || b.c_.empty()) return Poly(*a.field_);
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(*a.field_, std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Elem& c) {
  for (auto& x : c_) x *= c;
  normalize();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.field_->same_as(*b.field_) && a.c_ == b.c_;
}

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  const std::uint64_t p = field_->p();
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Elem& c = c_[i];
    if (c.is_zero()) continue;
    std::string mono;
    if (i > 0) {
      mono = std::string(1, var);
      if (i > 1) mono += "^" + std::to_string(i);
    }
    if (c.in_prime_field()) {
      const std::int64_t s = signed_residue(c.coeff(0), p);
      const std::uint64_t mag = static_cast<std::uint64_t>(s < 0 ? -s : s);
      if (s < 0) out += "-";
      else if (!out.empty()) out += "+";
      if (i == 0) out += std::to_string(mag);
      else if (mag == 1) out += mono;
      else out += std::to_string(mag) + "*" + mono;
    } else {
      if (!out.empty()) out += "+";
      out += "(" + field_->to_string(c) + ")";
      if (i > 0) out += "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (!a.field().same_as(b.field())) throw Error(Errc::FieldMismatch, "polynomials over different fields");
  const Field& F = a.field();
  if (a.degree() < b.degree()) return {Poly(F), a};
  std::vector<Elem> rem = a.coeffs();
  std::vector<Elem> quo(a.degree() - b.degree() + 1, F.zero());
  const Elem inv_lead = b.leading().inverse();
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = rem.size(); k-- > db;) {
    const Elem t = rem[k] * inv_lead;
    quo[k - db] = t;
    if (t.is_zero()) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= t * b.coeffs()[i];
  }
  rem.resize(db);
  return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& mod) {
  const Field& F = base.field();
  Poly acc = Poly::constant(F.one()) % mod;
  const Poly b = base % mod;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = (acc * acc) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * b) % mod;
  }
  return acc;
}

Poly change_field(const Poly& f, const Field& target) {
  std::vector<Elem> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(target.coerce(c));
  return Poly(target, std::move(v));
}

namespace {

constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 15;

// Distinct roots of a squarefree product of linear factors g.
void split_linear(const Poly& g, std::vector<Elem>& out) {
  const Field& F = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  if (F.order() <= kExhaustiveLimit || F.p() == 2) {
    const std::size_t want = static_cast<std::size_t>(g.degree());
    std::size_t found = 0;
    for (std::uint64_t i = 0; i < F.order() && found < want; ++i) {
      const Elem x = F.element(i);
      if (g(x).is_zero()) {
        out.push_back(x);
        ++found;
      }
    }
    return;
  }
  // Equal-degree splitting with (x + delta)^((q-1)/2) - 1.
  const mpz_class half = (mpz_class(F.order()) - 1) / 2;
  for (std::uint64_t i = 0; i < F.order(); ++i) {
    const Poly shift = Poly::x(F) + Poly::constant(F.element(i));
    Poly h = pow_mod(shift, half, g) - Poly::constant(F.one());
    h = gcd(h, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_linear(h, out);
      split_linear(divmod(g, h).quotient, out);
      return;
    }
  }
  throw Error(Errc::InsufficientField, "failed to split root product");
}

}  // namespace

std::vector<Root> roots_with_multiplicity(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "roots of the zero polynomial");
  const Field& F = f.field();
  std::vector<Root> out;
  if (f.degree() == 0) return out;
  // g = gcd(f, x^q - x) collects the distinct rational roots.
  const Poly xq = pow_mod(Poly::x(F), mpz_class(F.order()), f);
  const Poly g = gcd(f, xq - Poly::x(F));
  std::vector<Elem> distinct;
  split_linear(g, distinct);
  std::sort(distinct.begin(), distinct.end());
  for (const auto& r : distinct) {
    int m = 0;
    Poly rest = f;
    const Poly lin = Poly::linear(r);
    while (true) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      ++m;
      rest = std::move(q);
    }
    out.push_back({r, m});
  }
  return out;
}

std::vector<Elem> roots(const Poly& f) {
  std::vector<Elem> out;
  for (const auto& [v, m] : roots_with_multiplicity(f)) {
    for (int i = 0; i < m; ++i) out.push_back(v);
  }
  return out;
}

Elem resultant(std::span<const Elem> n, std::span<const Elem> d) {
  if (n.size() != d.size() || n.empty()) {
    throw Error(Errc::DegreeMismatch, "forms must share the formal degree");
  }
  const Field& F = n[0].field();
  const std::size_t k = n.size() - 1;
  if (k == 0) return F.one();
  const std::size_t size = 2 * k;
  // Rows 0..k-1 shift N, rows k..2k-1 shift D; columns run X^{2k-1} .. X^0.
  std::vector<std::vector<Elem>> m(size, std::vector<Elem>(size, F.zero()));
  for (std::size_t row = 0; row < k; ++row) {
    for (std::size_t i = 0; i <= k; ++i) {
      m[row][row + i] = n[k - i];
      m[k + row][row + i] = d[k - i];
    }
  }
  Elem det = F.one();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && m[pivot][col].is_zero()) ++pivot;
    if (pivot == size) return F.zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Elem inv = m[col][col].inverse();
    for (std::size_t row = col + 1; row < size; ++row) {
      if (m[row][col].is_zero()) continue;
      const Elem factor = m[row][col] * inv;
      for (std::size_t j = col; j < size; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  return det;
}

// ---------------------------------------------------------------------------

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  if (!num_.field().same_as(den_.field())) throw Error(Errc::FieldMismatch, "num/den over different fields");
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.field().one());
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).quotient;
    den_ = divmod(den_, g).quotient;
  }
  const Elem inv = den_.leading().inverse();
  num_ *= inv;
  den_ *= inv;
}

RatFun::RatFun(Poly num) : RatFun(num, Poly::constant(num.field().one())) {}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of the zero function");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFun(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

std::string RatFun::to_string(char var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::optional<Elem> proportional(const RatFun& phi, const RatFun& psi) {
  if (phi.is_zero() || psi.is_zero()) throw Error(Errc::ZeroFunction, "proportionality of the zero function");
  const Poly lhs = phi.num() * psi.den();
  const Poly rhs = psi.num() * phi.den();
  if (lhs.degree() != rhs.degree()) return std::nullopt;
  const Elem c = lhs.leading() / rhs.leading();
  if (lhs == rhs * c) return c;
  return std::nullopt;
}

RatFun compose(const RatFun& phi, const Poly& num, const Poly& den) {
  const RatFun inner(num, den);
  if (inner.num().degree() <= 0 && inner.den().degree() <= 0) {
    throw Error(Errc::ConstantMap, "composition with a constant map");
  }
  const Poly& a = inner.num();
  const Poly& b = inner.den();
  const std::size_t k = static_cast<std::size_t>(std::max(phi.num().degree(), phi.den().degree()));
  std::vector<Poly> apow{Poly::constant(a.field().one())};
  std::vector<Poly> bpow{Poly::constant(a.field().one())};
  for (std::size_t i = 1; i <= k; ++i) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  auto homogenize = [&](const Poly& f) {
    Poly acc(f.field());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
      if (f.coeffs()[i].is_zero()) continue;
      acc += apow[i] * bpow[k - i] * f.coeffs()[i];
    }
    return acc;
  };
  return RatFun(homogenize(phi.num()), homogenize(phi.den()));
}

}  // namespace towers
