#include "doctest.h"
#include "towers/error.hpp"
#include "towers/feq.hpp"
#include "towers/parse.hpp"
#include "towers/series.hpp"
#include "towers/tgraph.hpp"

using namespace towers;

namespace {

// Oracle: the defining double sum with library binomials.
mpz_class brute_a(unsigned n) {
  mpz_class s = 0, b, c;
  for (unsigned k = 0; k <= n; ++k) {
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    mpz_bin_uiui(c.get_mpz_t(), 2 * k, k);
    s += b * b * c;
  }
  return s;
}

}  // namespace

TEST_CASE("coeff_a") {
  CHECK(coeff_a(0) == 1);
  CHECK(coeff_a(4) == 639);
  CHECK(coeff_a(7) == 272835);
  const std::vector<mpz_class> head{1, 3, 15, 93, 639, 4653, 35169, 272835};
  CHECK(coeffs_a(8) == head);
  for (unsigned n = 0; n <= 200; ++n) CHECK(coeff_a(n) == brute_a(n));
}

TEST_CASE("truncate_H_mod_p") {
  const auto F5 = Field::make(5);
  CHECK(truncate_H_mod_p(*F5) == Poly::from_ints(*F5, std::vector<std::int64_t>{1, 3, 0, 3, 4}));
  CHECK(truncate_H_mod_p(*F5) == Poly::from_ints(*F5, std::vector<std::int64_t>{-1, 2, 0, 2, 1}) * F5->from_int(-1));
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    const auto F = Field::make(p);
    const Poly h = truncate_H_mod_p(*F);
    CHECK(h.coeff(0).is_one());
    CHECK(h.degree() == static_cast<int>(p) - 1);
    CHECK(h.leading() == F->from_int(legendre(-3, p)));
  }
  CHECK_THROWS_AS(truncate_H_mod_p(*Field::make(3)), Error);
  CHECK_THROWS_AS(truncate_H_mod_p(*Field::make(5, 2)), Error);
  CHECK(H_residues(5) == std::vector<std::int64_t>{1, -2, 0, -2, -1});
}

TEST_CASE("coeff_a_mod against exact values") {
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    for (unsigned n = 0; n <= 150; ++n) {
      CHECK(coeff_a_mod(n, p) == mpz_class(coeff_a(n) % static_cast<unsigned long>(p)).get_ui());
    }
  }
}

TEST_CASE("lucas_check") {
  CHECK(lucas_check(7, 5));
  CHECK(lucas_check(5, 5));
  CHECK(coeff_a_mod(5, 5) == 3);
  CHECK(coeff_a_mod(7, 5) == 0);
  CHECK(lucas_check(3, 5));
  for (std::uint64_t p : {5u, 7u, 11u}) {
    const auto t = lucas_table(p, 2000);
    CHECK(t.failures == 0);
    CHECK(!t.first_failure);
  }
}

TEST_CASE("hypergeometric identity") {
  CHECK(hypergeom_inner(0) == 1);
  CHECK(hypergeom_inner(1) == 6);
  CHECK(hypergeom_inner(2) == 90);
  CHECK(hypergeom_inner(3) == 1680);
  for (unsigned n = 0; n < 12; ++n) {
    mpz_class num, den;
    mpz_fac_ui(num.get_mpz_t(), 3 * n);
    mpz_fac_ui(den.get_mpz_t(), n);
    CHECK(hypergeom_inner(n) == mpq_class(num / (den * den * den)));
  }
  CHECK(hypergeom_identity_check(1));
  CHECK(hypergeom_identity_check(8));
  CHECK(hypergeom_identity_check(30));
}

TEST_CASE("ode") {
  CHECK(ode_check(3));
  CHECK(ode_check(20));
  const std::vector<mpq_class> one{1};
  const auto r = ode_residual(one);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == mpq_class(-2, 9));
  // A perturbed series fails.
  auto f = hypergeom_series(10);
  f[4] += 1;
  bool all_zero = true;
  for (const auto& v : ode_residual(f)) all_zero = all_zero && v == 0;
  CHECK(!all_zero);
}

TEST_CASE("series functional equation") {
  CHECK(series_feq_check(2));
  CHECK(series_feq_check(40));
}

TEST_CASE("li trick") {
  CHECK(li_trick_check(5, 60));
  CHECK(li_trick_check(7, 60));
  CHECK(li_trick_check(5, 3));
}

TEST_CASE("polynomial functional equation") {
  for (std::uint64_t p = 5; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    const auto r = poly_feq_check(*Field::make(p));
    CHECK(r.holds);
    CHECK(r.constant);
  }
}

TEST_CASE("GS analogue") {
  const auto F = Field::make(13);
  const auto F2 = Field::make(13, 2);
  const TowerGraph G = TowerGraph::build(map_parse("(x^2+1)/(2*x)", *F2), map_parse("y^2", *F2), F2);
  const Poly chi = chi_polynomial(G, *F);
  CHECK(chi.degree() == 12);
  CHECK(gs_feq_check(chi).holds);
  // A generic polynomial of the same degree fails.
  std::vector<std::int64_t> c(13, 0);
  c[0] = 1;
  c[12] = 1;
  c[5] = 3;
  CHECK(!gs_feq_check(Poly::from_ints(*F, c)).holds);
  CHECK_THROWS_AS(gs_feq_check(Poly::monomial(F->one(), 13)), Error);
}
