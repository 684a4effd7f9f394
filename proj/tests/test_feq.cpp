#include <random>
#include <set>

#include "doctest.h"
#include "towers/error.hpp"
#include "towers/feq.hpp"
#include "towers/parse.hpp"
#include "towers/series.hpp"

using namespace towers;

namespace {

std::vector<ProjPoint> pts(const Field& F, std::initializer_list<const char*> s) {
  std::vector<ProjPoint> out;
  for (const auto* t : s) out.push_back(parse_point(t, F));
  return out;
}

struct Setup {
  FieldPtr F;
  FieldPtr fp;
  RatMap f;
  RatMap g;
  std::vector<ProjPoint> s0;
};

Setup new_tower(std::uint64_t p, unsigned r = 2) {
  auto F = Field::make(p, r);
  return {F, Field::make(p), map_parse("(x^2+x)/(3*x-1)", *F), map_parse("y^2", *F),
          pts(*F, {"0", "1", "1/9", "inf"})};
}

Setup gs_tower(std::uint64_t p) {
  auto F = Field::make(p, 2);
  return {F, Field::make(p), map_parse("(x^2+1)/(2*x)", *F), map_parse("y^2", *F), pts(*F, {"1", "-1", "0", "inf"})};
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::SyntaxError;
}

}  // namespace

TEST_CASE("is_complete") {
  const auto F = Field::make(7);
  const RatMap f = map_parse("(x^2+x)/(3*x-1)", *F), g = map_parse("y^2", *F);
  const auto c = is_complete(f, g, pts(*F, {"0", "1", "-1", "1/3", "-1/3", "inf"}));
  CHECK(c.forward);
  CHECK(c.backward);
  CHECK(!is_complete(f, g, pts(*F, {"1"})).forward);
  const auto toy = is_complete(map_parse("x^2+x", *F), g, pts(*F, {"inf"}));
  CHECK(toy.forward);
  CHECK(toy.backward);
}

TEST_CASE("divisorial_check") {
  const auto s = new_tower(7, 1);
  CHECK(divisorial_check(s.f, s.g, s.s0));
  CHECK(!divisorial_check(s.f, s.g, pts(*s.F, {"1"})));
  const auto gs = gs_tower(7);
  CHECK(divisorial_check(gs.f, gs.g, gs.s0));
}

TEST_CASE("criteria agree on random S0") {
  // S0 drawn from the points of P^1(F_25) whose f- and g-fibres are
  // rational, mixed with pieces of the fixture's S0 and of the splitting
  // values so that complete cases occur.
  const auto s = new_tower(5);
  const auto& F = *s.F;
  std::vector<ProjPoint> pool;
  for (const auto& P : projective_line(F)) {
    try {
      fiber(s.f, P);
      fiber(s.g, P);
      pool.push_back(P);
    } catch (const Error&) {
    }
  }
  const auto t0 = root_points(truncate_H_mod_p(*s.fp), F);
  std::mt19937_64 rng(2024);
  int complete = 0;
  for (int k = 0; k < 100; ++k) {
    std::set<ProjPoint> s0;
    if (rng() % 2) s0.insert(s.s0.begin(), s.s0.end());
    if (rng() % 2) s0.insert(t0.begin(), t0.end());
    const int extra = static_cast<int>(rng() % 4);
    for (int j = 0; j < extra; ++j) s0.insert(pool[rng() % pool.size()]);
    const std::vector<ProjPoint> v(s0.begin(), s0.end());
    const auto c = is_complete(s.f, s.g, preimage(s.f, v));
    const bool both = c.forward && c.backward;
    CHECK(both == divisorial_check(s.f, s.g, v));
    complete += both;
  }
  CHECK(complete > 5);
  CHECK(complete < 95);
}

TEST_CASE("regularness_check at p = 5") {
  const auto s = new_tower(5);
  const auto t0 = root_points(truncate_H_mod_p(*s.fp), *s.F);
  REQUIRE(t0.size() == 4);
  const auto rep = regularness_check(s.f, s.g, s.s0, t0);
  CHECK(rep.holds);
  CHECK(rep.s == 1);
  CHECK(rep.t == 1);
  CHECK(rep.a == 1);
  CHECK(rep.b == 1);
  REQUIRE(rep.constant);
  CHECK(!rep.constant->is_zero());
  CHECK(principal_divisor(rep.rho) == restricted_different(s.f, s.s0) - restricted_different(s.g, s.s0));
  // phi = H_5 / (x (x - 1) (x - 1/9)) up to a constant.
  const Poly x = Poly::x(*s.F);
  const Poly one = Poly::constant(s.F->one());
  const Poly den = x * (x - one) * (x - Poly::constant(s.F->from_int(9).inverse()));
  CHECK(proportional(rep.phi, RatFun(change_field(truncate_H_mod_p(*s.fp), *s.F), den)));

  const auto doubled = regularness_check(s.f, s.g, s.s0, t0, std::pair{2, 2});
  CHECK(doubled.holds);
  CHECK(doubled.s == 2);
  CHECK(code_of([&] { regularness_check(s.f, s.g, s.s0, t0, std::pair{1, 2}); }) == Errc::DegreeMismatch);

  auto bad = t0;
  bad[0] = parse_point("0", *s.F);
  CHECK(code_of([&] { regularness_check(s.f, s.g, s.s0, bad); }) == Errc::RamifiedT0);
  CHECK(code_of([&] { regularness_check(s.f, s.g, pts(*s.F, {"1"}), t0); }) == Errc::NotComplete);
}

TEST_CASE("regularness_check soundness in both directions") {
  std::mt19937_64 rng(77);
  for (std::uint64_t p : {5u, 7u, 13u}) {
    const auto s = new_tower(p);
    const TowerGraph G = TowerGraph::build(s.f, s.g, s.F);
    const auto t0 = root_points(truncate_H_mod_p(*s.fp), *s.F);
    const auto rep = regularness_check(s.f, s.g, s.s0, t0);
    CHECK(rep.holds);
    std::set<std::size_t> regular;
    for (const auto& c : dregular_components(G)) regular.insert(c.vertices.begin(), c.vertices.end());
    for (const auto& P : preimage(s.f, t0)) CHECK(regular.contains(G.vertex_of(P)));

    const std::set<ProjPoint> t0set(t0.begin(), t0.end());
    const auto line = projective_line(*s.F);
    for (int k = 0; k < 5; ++k) {
      auto perturbed = t0;
      ProjPoint q = line[rng() % line.size()];
      while (t0set.contains(q) || q.is_infinity() || q.x().is_zero()) q = line[rng() % line.size()];
      perturbed[rng() % perturbed.size()] = q;
      CHECK(!regularness_check(s.f, s.g, s.s0, perturbed).holds);
    }
  }
}

TEST_CASE("regularness_check on the DRegular image") {
  for (std::uint64_t p : {5u, 7u, 11u}) {
    const auto s = new_tower(p);
    const TowerGraph G = TowerGraph::build(s.f, s.g, s.F);
    std::set<ProjPoint> values;
    const auto regular = dregular_components(G);
    for (auto v : regular.at(0).vertices) values.insert(G.point(G.f_value(v)));
    CHECK(regularness_check(s.f, s.g, s.s0, std::vector<ProjPoint>(values.begin(), values.end())).holds);
  }
}

TEST_CASE("GS functional criterion") {
  for (std::uint64_t p : {5u, 7u, 13u}) {
    const auto s = gs_tower(p);
    const TowerGraph G = TowerGraph::build(s.f, s.g, s.F);
    const Poly chi = chi_polynomial(G, *s.fp);
    CHECK(chi.degree() == static_cast<int>(p) - 1);
    const auto rep = regularness_check(s.f, s.g, s.s0, root_points(chi, *s.F));
    CHECK(rep.holds);
    CHECK(gs_feq_check(chi).holds);
  }
}

TEST_CASE("lenstra_check") {
  const auto F = Field::make(5, 2);
  const RatMap g = map_parse("y^2", *F);
  CHECK(lenstra_check(map_parse("x^2+x", *F), g, pts(*F, {"inf"})) == LenstraVerdict::NoSplittingSetPossible);
  CHECK(lenstra_check(map_parse("(x^2+x)/(3*x-1)", *F), g, pts(*F, {"0", "1", "-1", "1/3", "-1/3", "inf"})) ==
        LenstraVerdict::Inconclusive);
  const auto gs = gs_tower(5);
  CHECK(lenstra_check(gs.f, gs.g, preimage(gs.f, gs.s0)) == LenstraVerdict::Inconclusive);
  CHECK(preimage(gs.f, gs.s0).size() == 6);
  CHECK(code_of([&] { lenstra_check(gs.f, gs.g, pts(*F, {"1"})); }) == Errc::NotComplete);
}

TEST_CASE("chi_polynomial") {
  const auto F = Field::make(5, 2, std::vector<std::int64_t>{2, -1, 1});
  const auto fp = Field::make(5);
  const TowerGraph G = TowerGraph::build(map_parse("(x^2+x)/(3*x-1)", *F), map_parse("y^2", *F), F);
  CHECK(chi_polynomial(G, *fp).to_string() == "x^4+2*x^3+2*x-1");
  const TowerGraph toy = TowerGraph::build(map_parse("x^2+x", *F), map_parse("y^2", *F), F);
  CHECK(code_of([&] { chi_polynomial(toy, *fp); }) == Errc::NoRegularComponent);
}

TEST_CASE("criterion_report") {
  const auto s = new_tower(7);
  const auto rep = criterion_report(s.f, s.g, s.s0, root_points(truncate_H_mod_p(*s.fp), *s.F));
  CHECK(rep.complete.forward);
  CHECK(rep.complete.backward);
  CHECK(rep.divisorial_holds);
  REQUIRE(rep.functional);
  CHECK(rep.functional->holds);
  CHECK(rep.functional->s == 2);
  CHECK(rep.functional->t == 3);
}
