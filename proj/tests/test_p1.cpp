#include <random>

#include "doctest.h"
#include "towers/error.hpp"
#include "towers/p1.hpp"
#include "towers/parse.hpp"

using namespace towers;

namespace {

ProjPoint pt(const Field& F, const char* s) { return parse_point(s, F); }

template <class Span>
bool proportional_forms(const Span& got, std::vector<std::int64_t> want, const Elem& c) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (got[i] != c.field().from_int(want[i]) * c) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("map_parse") {
  const auto F = Field::make(5);
  const RatMap f = map_parse("(x^2+x)/(3*x-1)", *F);
  CHECK(f.degree() == 2);
  // N = X^2 + XY and D = 3XY - Y^2 up to the common factor fixed by the
  // monic affine denominator.
  const Elem c = F->from_int(3).inverse();
  CHECK(proportional_forms(f.num_form(), {0, 1, 1}, c));
  CHECK(proportional_forms(f.den_form(), {-1, 3, 0}, c));

  const RatMap g = map_parse("y^2", *F);
  CHECK(proportional_forms(g.num_form(), {0, 0, 1}, F->one()));
  CHECK(proportional_forms(g.den_form(), {1, 0, 0}, F->one()));

  try {
    map_parse("(2*x+2)/(x+1)", *F);
    FAIL("expected DegreeZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeZero);
  }
  CHECK(f.to_string() == "(2*x^2+2*x)/(x-2)");
}

TEST_CASE("map_eval") {
  const auto F = Field::make(5);
  const RatMap f = map_parse("(x^2+x)/(3*x-1)", *F);
  CHECK(f(pt(*F, "-1/3")) == pt(*F, "1/9"));
  CHECK(f(pt(*F, "inf")).is_infinity());
  CHECK(f(pt(*F, "-1")) == pt(*F, "0"));
  CHECK(f(pt(*F, "1/3")).is_infinity());

  // Evaluation at points of an extension.
  const auto E = Field::make(5, 2);
  const Elem a = E->generator();
  const Elem expect = (a * a + a) / (E->from_int(3) * a - E->one());
  CHECK(f(ProjPoint::affine(a)) == ProjPoint::affine(expect));
}

TEST_CASE("fiber") {
  const auto F = Field::make(5);
  const RatMap f = map_parse("(x^2+x)/(3*x-1)", *F);
  const RatMap g = map_parse("y^2", *F);
  const Divisor one = fiber(f, pt(*F, "1"));
  CHECK(one.degree() == 2);
  CHECK(one[pt(*F, "1")] == 2);

  const Divisor at_inf = fiber(f, pt(*F, "inf"));
  CHECK(at_inf[pt(*F, "1/3")] == 1);
  CHECK(at_inf[pt(*F, "inf")] == 1);
  CHECK(at_inf.terms().size() == 2);

  CHECK(fiber(g, pt(*F, "inf"))[pt(*F, "inf")] == 2);
  // 2 is not a square mod 5.
  CHECK_THROWS_AS(fiber(g, pt(*F, "2")), Error);
}

TEST_CASE("fibers have full degree over a splitting extension") {
  std::mt19937_64 rng(11);
  const auto F = Field::make(5);
  const auto E = Field::make(5, 2);
  int seen = 0;
  while (seen < 100) {
    std::vector<Elem> n, d;
    for (int i = 0; i < 3; ++i) n.push_back(F->element(rng() % 5));
    for (int i = 0; i < 3; ++i) d.push_back(F->element(rng() % 5));
    if (n == std::vector<Elem>(3, F->zero()) || d == std::vector<Elem>(3, F->zero())) continue;
    if (resultant(n, d).is_zero()) continue;
    const RatMap m = change_field(RatMap::from_forms(n, d), *E);
    for (const auto& t : projective_line(*F)) {
      const ProjPoint te = t.is_infinity() ? ProjPoint::infinity(*E) : ProjPoint::affine(E->embed(t.x()));
      CHECK(fiber(m, te).degree() == 2);
    }
    ++seen;
  }
}

TEST_CASE("ramification") {
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    const auto F = Field::make(p);
    const auto rf = ramification(map_parse("(x^2+x)/(3*x-1)", *F));
    CHECK(rf.size() == 2);
    CHECK(rf.at(pt(*F, "1")) == 2);
    CHECK(rf.at(pt(*F, "-1/3")) == 2);
    const auto rg = ramification(map_parse("y^2", *F));
    CHECK(rg.size() == 2);
    CHECK(rg.at(pt(*F, "0")) == 2);
    CHECK(rg.at(pt(*F, "inf")) == 2);
    const auto rgs = ramification(map_parse("(x^2+1)/(2*x)", *F));
    CHECK(rgs.size() == 2);
    CHECK(rgs.at(pt(*F, "1")) == 2);
    CHECK(rgs.at(pt(*F, "-1")) == 2);
    CHECK(ramification(map_parse("(2*x+1)/(x+1)", *F)).empty());
    // Riemann-Hurwitz, tame: sum (e - 1) = 2d - 2.
    for (const auto* m : {"(x^2+x)/(3*x-1)", "y^2", "(x^2+1)/(2*x)", "x^2+x"}) {
      int total = 0;
      for (const auto& [P, e] : ramification(map_parse(m, *F))) total += e - 1;
      CHECK(total == 2);
    }
  }
}

TEST_CASE("mobius_conjugate") {
  for (std::uint64_t p : {5u, 7u, 11u}) {
    const auto F = Field::make(p);
    const Mobius sigma(map_parse("(x-1)/(x-9)", *F));
    const Mobius tau(map_parse("(3*x+1)/(x-1)", *F));
    CHECK(mobius_conjugate(map_parse("x^2", *F), sigma, tau) == map_parse("(x^2+x)/(3*x-1)", *F));
    CHECK(mobius_conjugate(map_parse("(y^2+3*y)/(y-1)", *F), sigma, tau) == map_parse("y^2", *F));
    const Mobius id = Mobius::identity(*F);
    const RatMap m = map_parse("(x^2+x)/(3*x-1)", *F);
    CHECK(mobius_conjugate(m, id, id) == m);
    CHECK(compose(sigma.map(), sigma.inverse().map()) == RatMap::identity(*F));
  }
}

TEST_CASE("conjugation commutes with evaluation") {
  std::mt19937_64 rng(17);
  const auto F = Field::make(7, 2);
  const Mobius sigma(F->from_int(1), F->from_int(-1), F->from_int(1), F->from_int(-9));
  const Mobius tau(F->generator(), F->from_int(1), F->from_int(1), F->from_int(-1));
  const RatMap m = map_parse("(x^2+x)/(3*x-1)", *F);
  const RatMap c = mobius_conjugate(m, sigma, tau);
  const auto line = projective_line(*F);
  for (int k = 0; k < 100; ++k) {
    const ProjPoint& P = line[rng() % line.size()];
    CHECK(c(P) == sigma(m(tau(P))));
  }
}

TEST_CASE("degenerate forms are rejected") {
  const auto F = Field::make(5);
  std::vector<Elem> n{F->zero(), F->zero(), F->one()}, d{F->zero(), F->one(), F->zero()};
  CHECK_THROWS_AS(RatMap::from_forms(n, d), Error);
  CHECK_THROWS_AS(Mobius(F->one(), F->one(), F->one(), F->one()), Error);
}
