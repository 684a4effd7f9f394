#pragma once

// The integer sequence a_n = sum_k C(n,k)^2 C(2k,k), its truncations H_p
// modulo p, and the power-series and polynomial identities it satisfies.
// Series of "order N" carry the coefficients of x^0 .. x^{N-1}.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "towers/upoly.hpp"

namespace towers {

mpz_class coeff_a(unsigned n);
/// a_0 .. a_{count-1}.
std::vector<mpz_class> coeffs_a(unsigned count);

/// sum_{n < p} a_n x^n over the prime field F_p; throws BadPrime for p < 5
/// or a non-prime field.
Poly truncate_H_mod_p(const Field& fp);
/// Coefficients of H_p as symmetric residues, low degree first.
std::vector<std::int64_t> H_residues(std::uint64_t p);

/// a_n mod p computed directly, without digit expansion.
std::uint64_t coeff_a_mod(std::uint64_t n, std::uint64_t p);

/// a_n == prod a_{n_i} (mod p) for the base-p digits n_i of n.
bool lucas_check(std::uint64_t n, std::uint64_t p);

struct LucasSummary {
  std::uint64_t p = 0;
  std::uint64_t n_max = 0;
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> first_failure;
};

/// lucas_check for every 0 <= n <= n_max, sharing one factorial table.
LucasSummary lucas_table(std::uint64_t p, std::uint64_t n_max);

/// 27^n (1/3)_n (2/3)_n / (n!)^2, which equals (3n)!/(n!)^3.
mpq_class hypergeom_inner(unsigned n);

/// H(x) == 1/(1-3x) F(27 x^2 (1-x) / (1-3x)^3) through order n, with F
/// the hypergeometric series above and everything in exact rationals.
bool hypergeom_identity_check(unsigned n);

/// (1/3)_k (2/3)_k / (k!)^2 for k < n.
std::vector<mpq_class> hypergeom_series(unsigned n);

/// x(1-x)F'' + (1-2x)F' - (2/9)F for a truncated F, coefficient k for
/// 0 <= k <= max(0, len-2); coefficients past the truncation are zero.
std::vector<mpq_class> ode_residual(std::span<const mpq_class> f);

bool ode_check(unsigned n);

/// 1/(1-3x) H((x^2+x)/(3x-1)) == H(x^2) through order n.
bool series_feq_check(unsigned n);

/// H(x) == H_p(x) H_p(x^p) H_p(x^{p^2}) ... (mod p) through order n.
bool li_trick_check(std::uint64_t p, unsigned n);

struct FeqResult {
  bool holds = false;
  std::optional<Elem> constant;
};

/// sum_n h_n (x^2+x)^n (3x-1)^{p-1-n} ~ H_p(x^2) over F_p.
FeqResult poly_feq_check(const Field& fp);

/// x^{p-1} h((x^2+1)/(2x)) ~ h(x^2) for h of degree <= p-1, cleared of
/// denominators as sum_i h_i (x^2+1)^i 2^{-i} x^{p-1-i}.
FeqResult gs_feq_check(const Poly& h);

}  // namespace towers
