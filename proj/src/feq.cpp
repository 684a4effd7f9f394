#include "towers/feq.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "towers/error.hpp"

namespace towers {

namespace {

std::set<ProjPoint> as_set(std::span<const ProjPoint> s) { return {s.begin(), s.end()}; }

bool fibers_inside(const RatMap& outer, const RatMap& inner, const std::set<ProjPoint>& s) {
  // inner^{-1}(outer(S)) in S
  for (const auto& p : s) {
    std::vector<ProjPoint> over;
    try {
      over = fiber(inner, outer(p)).support();
    } catch (const Error& e) {
      // a fibre point outside the field is outside S
      if (e.code() == Errc::InsufficientField) return false;
      throw;
    }
    for (const auto& q : over) {
      if (!s.contains(q)) return false;
    }
  }
  return true;
}

}  // namespace

Completeness is_complete(const RatMap& f, const RatMap& g, std::span<const ProjPoint> s) {
  const auto set = as_set(s);
  return {fibers_inside(f, g, set), fibers_inside(g, f, set)};
}

std::vector<ProjPoint> preimage(const RatMap& f, std::span<const ProjPoint> s0) {
  std::set<ProjPoint> out;
  for (const auto& t : as_set(s0)) {
    for (const auto& p : fiber(f, t).support()) out.insert(p);
  }
  return {out.begin(), out.end()};
}

bool divisorial_check(const RatMap& f, const RatMap& g, std::span<const ProjPoint> s0) {
  const Divisor d0 = div_of_set(f.field(), s0);
  return pullback(f, d0) - pullback(g, d0) == restricted_different(f, s0) - restricted_different(g, s0);
}

FunctionalReport regularness_check(const RatMap& f, const RatMap& g, std::span<const ProjPoint> s0,
                                   std::span<const ProjPoint> t0, std::optional<std::pair<int, int>> st) {
  if (!divisorial_check(f, g, s0)) throw Error(Errc::NotComplete, "f^{-1}(S0) is not complete");
  const Field& F = f.field();
  const Divisor ds0 = div_of_set(F, s0);
  const Divisor dt0 = div_of_set(F, t0);
  for (const auto& [p, e] : ramification(g)) {
    if (dt0[g(p)] != 0) throw Error(Errc::RamifiedT0, "T0 contains the branch value " + g(p).label() + " of g");
  }
  const int n_s = ds0.degree(), n_t = dt0.degree();
  int s = 0, t = 0;
  if (st) {
    std::tie(s, t) = *st;
    if (s <= 0 || t <= 0 || t * n_s != s * n_t) {
      throw Error(Errc::DegreeMismatch, "need positive s, t with t #S0 = s #T0");
    }
  } else {
    if (n_s == 0 || n_t == 0) throw Error(Errc::DegreeMismatch, "S0 and T0 must be nonempty");
    const int d = std::gcd(n_s, n_t);
    s = n_s / d;
    t = n_t / d;
  }
  RatFun rho = divisor_to_function(restricted_different(f, s0) - restricted_different(g, s0));
  RatFun phi = divisor_to_function(s * dt0 - t * ds0);
  const RatFun lhs = rho.pow(t) * compose(phi, f);
  const RatFun rhs = compose(phi, g);
  const auto c = proportional(lhs, rhs);
  return FunctionalReport{c.has_value(), c, std::move(rho), std::move(phi), s, t, 1, 1};
}

std::string to_string(LenstraVerdict v) {
  return v == LenstraVerdict::NoSplittingSetPossible ? "NoSplittingSetPossible" : "Inconclusive";
}

LenstraVerdict lenstra_check(const RatMap& f, const RatMap& g, std::span<const ProjPoint> s) {
  const Completeness c = is_complete(f, g, s);
  if (!c.forward || !c.backward) throw Error(Errc::NotComplete, "S is not complete");
  std::set<ProjPoint> s0;
  for (const auto& p : s) s0.insert(f(p));
  const std::vector<ProjPoint> v0(s0.begin(), s0.end());
  return restricted_different(f, v0) == restricted_different(g, v0) ? LenstraVerdict::NoSplittingSetPossible
                                                                     : LenstraVerdict::Inconclusive;
}

Poly chi_polynomial(const TowerGraph& g, const Field& prime) {
  const auto regular = dregular_components(g);
  if (regular.empty()) throw Error(Errc::NoRegularComponent, "the graph has no DRegular component");
  std::set<std::size_t> values;
  for (std::size_t v : regular.front().vertices) values.insert(g.f_value(v));
  const Field& F = g.field();
  Poly chi = Poly::constant(F.one());
  for (std::size_t v : values) {
    const ProjPoint& P = g.point(v);
    if (!P.is_infinity()) chi *= Poly::linear(P.x());
  }
  std::vector<Elem> coeffs;
  for (const auto& c : chi.coeffs()) {
    if (!c.in_prime_field()) throw Error(Errc::FieldMismatch, "chi has a coefficient outside the prime field");
    coeffs.push_back(prime.embed(c));
  }
  return Poly(prime, std::move(coeffs));
}

CriterionReport criterion_report(const RatMap& f, const RatMap& g, std::span<const ProjPoint> s0,
                                 std::span<const ProjPoint> t0) {
  CriterionReport out;
  const auto s = preimage(f, s0);
  out.complete = is_complete(f, g, s);
  out.divisorial_holds = divisorial_check(f, g, s0);
  if (out.divisorial_holds) out.functional = regularness_check(f, g, s0, t0);
  return out;
}

std::vector<ProjPoint> root_points(const Poly& h, const Field& field) {
  std::vector<ProjPoint> out;
  for (const auto& r : roots_with_multiplicity(change_field(h, field))) out.push_back(ProjPoint::affine(r.value));
  return out;
}

}  // namespace towers
