#include "towers/serialize.hpp"

namespace towers {

namespace {

json mpz_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace

json elem_json(const Elem& x) {
  const Field& F = x.field();
  if (x.in_prime_field()) return signed_residue(x.coeff(0), F.p());
  return F.to_string(x);
}

json coeffs_json(const Poly& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(elem_json(c));
  return out;
}

json poly_json(const Poly& f, char var) {
  return {{"text", f.to_string(var)}, {"coeffs", coeffs_json(f)}, {"degree", f.degree()}};
}

json ratfun_json(const RatFun& r) {
  return {{"num", r.num().to_string()}, {"den", r.den().to_string()}};
}

json divisor_json(const Divisor& d) {
  json out = json::array();
  for (const auto& [p, m] : d.terms()) out.push_back({{"point", p.label()}, {"mult", m}});
  return out;
}

json points_json(const std::vector<ProjPoint>& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(p.label());
  return out;
}

json functional_json(const FunctionalReport& r) {
  return {{"holds", r.holds},
          {"constant", r.constant ? elem_json(*r.constant) : json(nullptr)},
          {"rho", ratfun_json(r.rho)},
          {"phi", ratfun_json(r.phi)},
          {"s", r.s},
          {"t", r.t},
          {"a", r.a},
          {"b", r.b}};
}

json criterion_json(const CriterionReport& r) {
  return {{"forward_complete", r.complete.forward},
          {"backward_complete", r.complete.backward},
          {"divisorial_holds", r.divisorial_holds},
          {"functional", r.functional ? functional_json(*r.functional) : json(nullptr)}};
}

json solution_json(const SearchSolution& s) {
  const std::uint64_t p = s.fp->p();
  json params = json::array();
  for (auto c : s.params.c) params.push_back(signed_residue(c, p));
  return {{"params", params},
          {"f", s.f.to_string('x')},
          {"r2", s.r2.label()},
          {"witnesses", {{"P1", s.p1.label()}, {"P2", s.p2.label()}, {"field", "F_" + std::to_string(s.fp2->order()) + " mod " + s.fp2->modulus_string()}}},
          {"satisfied", s.satisfied}};
}

json genus_json(const std::vector<GenusRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"delta", r.delta ? mpz_json(*r.delta) : json(nullptr)},
                   {"genus", mpz_json(r.genus)},
                   {"N_lower", mpz_json(r.n_lower)},
                   {"ratio", r.ratio ? json(*r.ratio) : json(nullptr)}});
  }
  return out;
}

}  // namespace towers
