#include "towers/divisor.hpp"

#include "towers/error.hpp"
#include "towers/p1.hpp"

namespace towers {

int Divisor::degree() const {
  int d = 0;
  for (const auto& [p, m] : terms_) d += m;
  return d;
}

bool Divisor::is_effective() const {
  for (const auto& [p, m] : terms_) {
    if (m < 0) return false;
  }
  return true;
}

int Divisor::operator[](const ProjPoint& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<ProjPoint> Divisor::support() const {
  std::vector<ProjPoint> out;
  out.reserve(terms_.size());
  for (const auto& [p, m] : terms_) out.push_back(p);
  return out;
}

void Divisor::add(const ProjPoint& p, int mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms_.emplace(p, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (const auto& [p, m] : o.terms_) add(p, m);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (const auto& [p, m] : o.terms_) add(p, -m);
  return *this;
}

Divisor& Divisor::operator*=(int k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, m] : terms_) m *= k;
  return *this;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, m] : terms_) {
    if (!out.empty()) out += m < 0 ? " - " : " + ";
    else if (m < 0) out += "-";
    const int a = m < 0 ? -m : m;
    if (a != 1) out += std::to_string(a);
    out += "[" + p.label() + "]";
  }
  return out;
}

Divisor div_of_set(const Field& field, std::span<const ProjPoint> s) {
  Divisor out(field);
  for (const auto& p : s) {
    if (out[p] == 0) out.add(p, 1);
  }
  return out;
}

Divisor pullback(const RatMap& m, const Divisor& d) {
  Divisor out(m.field());
  for (const auto& [p, k] : d.terms()) out += k * fiber(m, p);
  return out;
}

Divisor restricted_different(const RatMap& m, std::span<const ProjPoint> s0) {
  Divisor out(m.field());
  const Divisor base = div_of_set(m.field(), s0);
  for (const auto& t : base.support()) {
    const Divisor over = fiber(m, t);
    for (const auto& [p, e] : over.terms()) out.add(p, e - 1);
  }
  return out;
}

namespace {

void add_roots(Divisor& out, const Poly& f, int sign) {
  int mass = 0;
  for (const auto& [v, mult] : roots_with_multiplicity(f)) {
    out.add(ProjPoint::affine(v), sign * mult);
    mass += mult;
  }
  if (mass < f.degree()) throw Error(Errc::InsufficientField, "zeros or poles are not rational over the field");
}

}  // namespace

Divisor principal_divisor(const RatFun& phi) {
  if (phi.is_zero()) throw Error(Errc::ZeroFunction, "the zero function has no divisor");
  Divisor out(phi.field());
  add_roots(out, phi.num(), 1);
  add_roots(out, phi.den(), -1);
  out.add(ProjPoint::infinity(phi.field()), phi.den().degree() - phi.num().degree());
  return out;
}

RatFun divisor_to_function(const Divisor& d) {
  if (d.degree() != 0) throw Error(Errc::NonzeroDegree, "only degree-zero divisors are principal");
  const Field& F = d.field();
  Poly num = Poly::constant(F.one()), den = Poly::constant(F.one());
  for (const auto& [p, m] : d.terms()) {
    if (p.is_infinity()) continue;
    const Poly lin = Poly::linear(p.x());
    if (m > 0) num *= lin.pow(static_cast<unsigned>(m));
    else den *= lin.pow(static_cast<unsigned>(-m));
  }
  return RatFun(num, den);
}

}  // namespace towers
