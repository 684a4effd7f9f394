#include "towers/series.hpp"

#include "towers/error.hpp"

namespace towers {

namespace {

template <class T>
std::vector<T> mul_trunc(const std::vector<T>& a, const std::vector<T>& b, std::size_t n) {
  std::vector<T> out(n, T(0));
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// sum_k c_k u^k for a series u of valuation >= 1.
template <class T>
std::vector<T> compose_trunc(const std::vector<T>& c, const std::vector<T>& u, std::size_t n) {
  std::vector<T> out(n, T(0));
  std::vector<T> power(n, T(0));
  power[0] = 1;
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) out[i] += c[k] * power[i];
    power = mul_trunc(power, u, n);
  }
  return out;
}

/// 1/(1-3x) = sum 3^k x^k.
template <class T>
std::vector<T> geometric3(std::size_t n) {
  std::vector<T> out(n);
  T v = 1;
  for (auto& c : out) {
    c = v;
    v *= 3;
  }
  return out;
}

struct FactorialTable {
  std::uint64_t p;
  std::vector<std::uint64_t> unit;      // m! with the p-part removed, mod p
  std::vector<std::uint64_t> inv_unit;
  std::vector<std::uint32_t> val;       // v_p(m!)

  FactorialTable(std::uint64_t prime, std::uint64_t m_max) : p(prime) {
    unit.resize(m_max + 1);
    inv_unit.resize(m_max + 1);
    val.resize(m_max + 1);
    unit[0] = 1;
    val[0] = 0;
    for (std::uint64_t m = 1; m <= m_max; ++m) {
      std::uint64_t k = m;
      std::uint32_t v = 0;
      while (k % p == 0) {
        k /= p;
        ++v;
      }
      unit[m] = unit[m - 1] * (k % p) % p;
      val[m] = val[m - 1] + v;
    }
    for (std::uint64_t m = 0; m <= m_max; ++m) inv_unit[m] = mod_inverse(unit[m], p);
  }

  std::uint64_t binom(std::uint64_t n, std::uint64_t k) const {
    if (val[n] > val[k] + val[n - k]) return 0;
    return unit[n] * inv_unit[k] % p * inv_unit[n - k] % p;
  }

  std::uint64_t a_mod(std::uint64_t n) const {
    std::uint64_t s = 0;
    for (std::uint64_t k = 0; k <= n; ++k) {
      const std::uint64_t b = binom(n, k);
      if (b == 0) continue;
      s = (s + b * b % p * binom(2 * k, k)) % p;
    }
    return s;
  }
};

void check_prime(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) throw Error(Errc::BadPrime, "need a prime p >= 5, got " + std::to_string(p));
}

bool lucas_with(const FactorialTable& t, const std::vector<std::uint64_t>& digit_values, std::uint64_t n) {
  std::uint64_t rhs = 1;
  for (std::uint64_t m = n; m > 0 && rhs != 0; m /= t.p) rhs = rhs * digit_values[m % t.p] % t.p;
  return t.a_mod(n) == rhs;
}

std::vector<std::uint64_t> digit_values(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (unsigned d = 0; d < p; ++d) out.push_back(mpz_class(coeff_a(d) % static_cast<unsigned long>(p)).get_ui());
  return out;
}

}  // namespace

mpz_class coeff_a(unsigned n) {
  mpz_class sum = 0, bin = 1, central = 1;  // C(n,k), C(2k,k)
  for (unsigned k = 0; k <= n; ++k) {
    sum += bin * bin * central;
    bin = bin * (n - k) / (k + 1);
    central = central * (2 * k + 1) * (2 * k + 2) / ((k + 1) * (k + 1));
  }
  return sum;
}

std::vector<mpz_class> coeffs_a(unsigned count) {
  std::vector<mpz_class> out;
  out.reserve(count);
  for (unsigned n = 0; n < count; ++n) out.push_back(coeff_a(n));
  return out;
}

Poly truncate_H_mod_p(const Field& fp) {
  if (!fp.is_prime_field()) throw Error(Errc::BadPrime, "H_p lives over the prime field");
  check_prime(fp.p());
  std::vector<Elem> c;
  for (unsigned n = 0; n < fp.p(); ++n) {
    c.push_back(fp.from_int(static_cast<std::int64_t>(mpz_class(coeff_a(n) % static_cast<unsigned long>(fp.p())).get_ui())));
  }
  return Poly(fp, std::move(c));
}

std::vector<std::int64_t> H_residues(std::uint64_t p) {
  check_prime(p);
  std::vector<std::int64_t> out;
  for (const auto& v : digit_values(p)) out.push_back(signed_residue(v, p));
  return out;
}

std::uint64_t coeff_a_mod(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::BadPrime, "modulus must be prime");
  return FactorialTable(p, 2 * n).a_mod(n);
}

bool lucas_check(std::uint64_t n, std::uint64_t p) {
  check_prime(p);
  return lucas_with(FactorialTable(p, 2 * n), digit_values(p), n);
}

LucasSummary lucas_table(std::uint64_t p, std::uint64_t n_max) {
  check_prime(p);
  const FactorialTable t(p, 2 * n_max);
  const auto digits = digit_values(p);
  LucasSummary out{p, n_max, 0, std::nullopt};
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (!lucas_with(t, digits, n)) {
      ++out.failures;
      if (!out.first_failure) out.first_failure = n;
    }
  }
  return out;
}

std::vector<mpq_class> hypergeom_series(unsigned n) {
  std::vector<mpq_class> out;
  mpq_class c = 1;
  for (unsigned k = 0; k < n; ++k) {
    out.push_back(c);
    // (1/3 + k)(2/3 + k) / (k+1)^2
    c *= mpq_class(3 * k + 1, 3) * mpq_class(3 * k + 2, 3) / mpq_class((k + 1) * (k + 1));
    c.canonicalize();
  }
  return out;
}

mpq_class hypergeom_inner(unsigned n) {
  mpz_class p27;
  mpz_ui_pow_ui(p27.get_mpz_t(), 27, n);
  mpq_class v = hypergeom_series(n + 1).back() * mpq_class(p27);
  v.canonicalize();
  return v;
}

bool hypergeom_identity_check(unsigned n) {
  if (n == 0) return true;
  // u = x^2 (1 - x) / (1 - 3x)^3
  const auto g = geometric3<mpq_class>(n);
  const auto g3 = mul_trunc(mul_trunc(g, g, n), g, n);
  std::vector<mpq_class> num(n, mpq_class(0));
  if (n > 2) num[2] = 1;
  if (n > 3) num[3] = -1;
  const auto u = mul_trunc(num, g3, n);
  std::vector<mpq_class> inner;
  for (unsigned k = 0; 2 * k < n; ++k) inner.push_back(hypergeom_inner(k));
  const auto rhs = mul_trunc(g, compose_trunc(inner, u, n), n);
  const auto a = coeffs_a(n);
  for (unsigned k = 0; k < n; ++k) {
    if (rhs[k] != mpq_class(a[k])) return false;
  }
  return true;
}

std::vector<mpq_class> ode_residual(std::span<const mpq_class> f) {
  auto c = [&](std::size_t k) { return k < f.size() ? f[k] : mpq_class(0); };
  const std::size_t top = f.size() >= 2 ? f.size() - 2 : 0;
  std::vector<mpq_class> out;
  for (std::size_t k = 0; k <= top; ++k) {
    const mpq_class kk(static_cast<unsigned long>(k));
    mpq_class r = (kk + 1) * (kk + 1) * c(k + 1) - (kk * kk + kk + mpq_class(2, 9)) * c(k);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

bool ode_check(unsigned n) {
  const auto f = hypergeom_series(n);
  for (const auto& r : ode_residual(f)) {
    if (r != 0) return false;
  }
  return true;
}

bool series_feq_check(unsigned n) {
  if (n == 0) return true;
  const auto a = coeffs_a(n);
  const auto g = geometric3<mpz_class>(n);
  // (x^2+x)/(3x-1) = -(x + x^2) / (1 - 3x)
  std::vector<mpz_class> num(n, mpz_class(0));
  if (n > 1) num[1] = -1;
  if (n > 2) num[2] = -1;
  const auto u = mul_trunc(num, g, n);
  const auto lhs = mul_trunc(g, compose_trunc(a, u, n), n);
  for (unsigned k = 0; k < n; ++k) {
    const mpz_class rhs = k % 2 == 0 ? a[k / 2] : mpz_class(0);
    if (lhs[k] != rhs) return false;
  }
  return true;
}

bool li_trick_check(std::uint64_t p, unsigned n) {
  check_prime(p);
  if (n == 0) return true;
  const auto a = coeffs_a(n);
  std::vector<std::uint64_t> hp(p), prod(n, 0);
  for (std::uint64_t i = 0; i < p; ++i) hp[i] = mpz_class(coeff_a(static_cast<unsigned>(i)) % static_cast<unsigned long>(p)).get_ui();
  prod[0] = 1;
  for (std::uint64_t step = 1; step < n; step *= p) {
    // prod *= H_p(x^step)
    std::vector<std::uint64_t> next(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (prod[i] == 0) continue;
      for (std::uint64_t j = 0; j < p && i + j * step < n; ++j) {
        next[i + j * step] = (next[i + j * step] + prod[i] * hp[j]) % p;
      }
    }
    prod = std::move(next);
  }
  for (unsigned k = 0; k < n; ++k) {
    if (mpz_class(a[k] % static_cast<unsigned long>(p)).get_ui() != prod[k]) return false;
  }
  return true;
}

namespace {

FeqResult proportional_polys(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {lhs.is_zero() && rhs.is_zero(), std::nullopt};
  const auto c = proportional(RatFun(lhs), RatFun(rhs));
  return {c.has_value(), c};
}

}  // namespace

FeqResult poly_feq_check(const Field& fp) {
  const Poly h = truncate_H_mod_p(fp);
  const std::uint64_t p = fp.p();
  const Poly x = Poly::x(fp);
  const Poly u = x * x + x;
  const Poly v = x * fp.from_int(3) - Poly::constant(fp.one());
  Poly lhs(fp);
  for (unsigned n = 0; n < p; ++n) lhs += u.pow(n) * v.pow(static_cast<unsigned>(p - 1 - n)) * h.coeff(n);
  return proportional_polys(lhs, h.inflate(2));
}

FeqResult gs_feq_check(const Poly& h) {
  const Field& F = h.field();
  const std::uint64_t p = F.p();
  if (h.degree() > static_cast<int>(p) - 1) throw Error(Errc::DegreeMismatch, "h must have degree <= p-1");
  const Poly x = Poly::x(F);
  const Poly u = x * x + Poly::constant(F.one());
  const Elem half = F.from_int(2).inverse();
  Poly lhs(F);
  for (int i = 0; i <= h.degree(); ++i) {
    lhs += u.pow(static_cast<unsigned>(i)) * x.pow(static_cast<unsigned>(p - 1 - i)) * (h.coeff(i) * half.pow(i));
  }
  return proportional_polys(lhs, h.inflate(2));
}

}  // namespace towers
