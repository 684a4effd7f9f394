#include "towers/p1.hpp"

#include <algorithm>

#include "towers/error.hpp"

namespace towers {

namespace {

std::vector<Elem> form_from_poly(const Poly& f, std::size_t degree) {
  std::vector<Elem> out(degree + 1, f.field().zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out.at(i) = f.coeffs()[i];
  return out;
}

}  // namespace

RatMap::RatMap(std::vector<Elem> num, std::vector<Elem> den) : num_(std::move(num)), den_(std::move(den)) {
  // Scale so that D(x, 1) is monic; D(x, 1) = 0 would force Res = 0.
  std::size_t lead = den_.size();
  while (lead > 0 && den_[lead - 1].is_zero()) --lead;
  const Elem inv = den_[lead - 1].inverse();
  for (auto& c : num_) c *= inv;
  for (auto& c : den_) c *= inv;
}

RatMap RatMap::from_forms(std::vector<Elem> num, std::vector<Elem> den) {
  if (num.size() != den.size() || num.size() < 2) {
    throw Error(Errc::DegreeMismatch, "map forms need a common formal degree >= 1");
  }
  if (resultant(num, den).is_zero()) {
    throw Error(Errc::DegreeZero, "forms share a root: the map drops degree");
  }
  return RatMap(std::move(num), std::move(den));
}

RatMap RatMap::from_fraction(const Poly& num, const Poly& den) {
  const RatFun reduced(num, den);
  const int d = std::max(reduced.num().degree(), reduced.den().degree());
  if (d < 1) throw Error(Errc::DegreeZero, "constant map");
  const auto deg = static_cast<std::size_t>(d);
  return from_forms(form_from_poly(reduced.num(), deg), form_from_poly(reduced.den(), deg));
}

RatMap RatMap::identity(const Field& field) {
  return RatMap({field.zero(), field.one()}, {field.one(), field.zero()});
}

Poly RatMap::num() const { return Poly(field(), num_); }
Poly RatMap::den() const { return Poly(field(), den_); }

ProjPoint RatMap::operator()(const ProjPoint& p) const {
  const Field& F = p.field();
  Elem n = F.zero(), d = F.zero();
  if (p.is_infinity()) {
    n = F.coerce(num_.back());
    d = F.coerce(den_.back());
  } else {
    const Elem& x = p.x();
    for (std::size_t i = num_.size(); i-- > 0;) {
      n = n * x + F.coerce(num_[i]);
      d = d * x + F.coerce(den_[i]);
    }
  }
  if (d.is_zero()) return ProjPoint::infinity(F);
  return ProjPoint::affine(n / d);
}

Poly RatMap::fiber_poly(const ProjPoint& t) const {
  if (t.is_infinity()) return den();
  return num() - den() * t.x();
}

std::string RatMap::to_string(char var) const {
  const Poly n = num(), d = den();
  if (d.degree() == 0) return n.to_string(var);
  auto terms = [](const Poly& f) {
    return std::count_if(f.coeffs().begin(), f.coeffs().end(), [](const Elem& c) { return !c.is_zero(); });
  };
  const std::string ns = terms(n) > 1 ? "(" + n.to_string(var) + ")" : n.to_string(var);
  return ns + "/(" + d.to_string(var) + ")";
}

RatMap compose(const RatMap& outer, const RatMap& inner) {
  if (!outer.field().same_as(inner.field())) throw Error(Errc::FieldMismatch, "maps over different fields");
  const Field& F = outer.field();
  const std::size_t a = outer.degree();
  const std::size_t b = inner.degree();
  const Poly bn = inner.num(), bd = inner.den();
  std::vector<Poly> npow{Poly::constant(F.one())}, dpow{Poly::constant(F.one())};
  for (std::size_t i = 1; i <= a; ++i) {
    npow.push_back(npow.back() * bn);
    dpow.push_back(dpow.back() * bd);
  }
  auto substitute = [&](std::span<const Elem> form) {
    Poly acc(F);
    for (std::size_t i = 0; i <= a; ++i) {
      if (!form[i].is_zero()) acc += npow[i] * dpow[a - i] * form[i];
    }
    return form_from_poly(acc, a * b);
  };
  return RatMap::from_forms(substitute(outer.num_form()), substitute(outer.den_form()));
}

RatMap change_field(const RatMap& m, const Field& target) {
  if (m.field().same_as(target)) return m;
  std::vector<Elem> n, d;
  for (const auto& c : m.num_form()) n.push_back(target.coerce(c));
  for (const auto& c : m.den_form()) d.push_back(target.coerce(c));
  return RatMap::from_forms(std::move(n), std::move(d));
}

RatFun compose(const RatFun& phi, const RatMap& m) { return compose(phi, m.num(), m.den()); }

Mobius::Mobius(const Elem& a, const Elem& b, const Elem& c, const Elem& d)
    : map_(RatMap::from_forms({b, a}, {d, c})) {}

Mobius::Mobius(const RatMap& m) : map_(m) {
  if (m.degree() != 1) throw Error(Errc::DegreeMismatch, "a Mobius map has degree one");
}

Mobius Mobius::identity(const Field& field) { return Mobius(RatMap::identity(field)); }

Mobius Mobius::inverse() const {
  const auto n = map_.num_form();
  const auto d = map_.den_form();
  // (a x + b) / (c x + d)  ->  (d x - b) / (-c x + a)
  return Mobius(d[0], -n[0], -d[1], n[1]);
}

RatMap mobius_conjugate(const RatMap& m, const Mobius& sigma, const Mobius& tau) {
  return compose(sigma.map(), compose(m, tau.map()));
}

Divisor fiber(const RatMap& m, const ProjPoint& t) {
  const Field& F = m.field();
  const Poly f = m.fiber_poly(t);
  Divisor out(F);
  int mass = 0;
  for (const auto& [v, mult] : roots_with_multiplicity(f)) {
    out.add(ProjPoint::affine(v), mult);
    mass += mult;
  }
  if (mass < f.degree()) {
    throw Error(Errc::InsufficientField, "fiber over " + t.label() + " is not rational over the field");
  }
  const int at_inf = static_cast<int>(m.degree()) - f.degree();
  if (at_inf > 0) out.add(ProjPoint::infinity(F), at_inf);
  return out;
}

int ramification_index(const RatMap& m, const ProjPoint& p) {
  const Poly f = m.fiber_poly(m(p));
  if (p.is_infinity()) return static_cast<int>(m.degree()) - f.degree();
  int e = 0;
  Poly rest = f;
  const Poly lin = Poly::linear(p.x());
  while (true) {
    auto [q, r] = divmod(rest, lin);
    if (!r.is_zero()) break;
    ++e;
    rest = std::move(q);
  }
  return e;
}

std::map<ProjPoint, int> ramification(const RatMap& m) {
  const Field& F = m.field();
  std::map<ProjPoint, int> out;
  const Poly n = m.num(), d = m.den();
  const Poly w = n.derivative() * d - n * d.derivative();
  auto consider = [&](const ProjPoint& p) {
    const int e = ramification_index(m, p);
    if (e >= 2) out.emplace(p, e);
  };
  if (w.is_zero()) {
    // Inseparable map: every point ramifies, scan the whole line.
    for (const auto& p : projective_line(F)) consider(p);
    return out;
  }
  int mass = 0;
  for (const auto& [v, mult] : roots_with_multiplicity(w)) {
    consider(ProjPoint::affine(v));
    mass += mult;
  }
  if (mass < w.degree()) {
    throw Error(Errc::InsufficientField, "ramification points are not all rational");
  }
  consider(ProjPoint::infinity(F));
  return out;
}

}  // namespace towers
