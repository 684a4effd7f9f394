#include "towers/search.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "towers/error.hpp"
#include "towers/tgraph.hpp"

namespace towers {

namespace {

struct Mod {
  std::uint64_t p;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
};

using Form = std::array<std::uint64_t, 3>;  // (X^2, XY, Y^2) coefficients

std::uint64_t eval(const Mod& m, const Form& f, std::uint64_t x, std::uint64_t y) {
  return m.add(m.add(m.mul(f[0], m.mul(x, x)), m.mul(f[1], m.mul(x, y))), m.mul(f[2], m.mul(y, y)));
}

/// Resultant of two binary quadratic forms.
std::uint64_t res2(const Mod& m, const Form& a, const Form& b) {
  const std::uint64_t c20 = m.sub(m.mul(a[0], b[2]), m.mul(a[2], b[0]));
  const std::uint64_t c21 = m.sub(m.mul(a[0], b[1]), m.mul(a[1], b[0]));
  const std::uint64_t c10 = m.sub(m.mul(a[1], b[2]), m.mul(a[2], b[1]));
  return m.sub(m.mul(c20, c20), m.mul(c21, c10));
}

struct Verdict {
  bool ok = false;
  std::uint64_t u = 0, v = 0;  // r2 = (u : v)
};

Verdict fast_check(const SearchParams& s, std::uint64_t p) {
  const Mod m{p};
  const Form n{s.c[0], s.c[1], s.c[2]};
  const Form d{s.c[3], s.c[4], s.c[5]};
  const auto [a2, a1, a0] = n;
  const auto [b2, b1, b0] = d;
  // loops at 0 and inf
  if (a0 != 0 || b2 != 0) return {};
  if (res2(m, n, d) == 0) return {};
  // loop at 1
  if (eval(m, n, 1, 1) != eval(m, d, 1, 1)) return {};
  // ramified at 1: the Wronskian (a2b1-a1b2) x^2 + 2(a2b0-a0b2) x + (a1b0-a0b1) vanishes
  const std::uint64_t w2 = m.sub(m.mul(a2, b1), m.mul(a1, b2));
  const std::uint64_t w1 = m.mul(2, m.sub(m.mul(a2, b0), m.mul(a0, b2)));
  const std::uint64_t w0 = m.sub(m.mul(a1, b0), m.mul(a0, b1));
  if (m.add(m.add(w2, w1), w0) != 0) return {};
  // r2 = (w0 : w2), distinct from 0, inf and 1
  const std::uint64_t u = w0, v = w2;
  if (u == 0 || v == 0 || u == v) return {};
  // loop at r2
  if (m.mul(eval(m, n, u, v), m.mul(v, v)) != m.mul(eval(m, d, u, v), m.mul(u, u))) return {};
  // P1: g(P1) = f(1) and N(P1) = 0
  const std::uint64_t t0 = eval(m, n, 1, 1), t1 = eval(m, d, 1, 1);
  if (res2(m, Form{t1, 0, m.sub(0, t0)}, n) != 0) return {};
  // P2: g(P2) = f(r2) and D(P2) = 0
  const std::uint64_t s0 = eval(m, n, u, v), s1 = eval(m, d, u, v);
  if (res2(m, Form{s1, 0, m.sub(0, s0)}, d) != 0) return {};
  return {true, u, v};
}

/// First point of P^1(F) where both forms (coefficients over the prime
/// field, index i of X^i Y^{2-i}) vanish.
std::optional<ProjPoint> common_root(const Field& F, const Form& a, const Form& b) {
  auto form_at = [&](const Form& f, const ProjPoint& P) {
    const Elem c2 = F.from_int(static_cast<std::int64_t>(f[0]));
    const Elem c1 = F.from_int(static_cast<std::int64_t>(f[1]));
    const Elem c0 = F.from_int(static_cast<std::int64_t>(f[2]));
    if (P.is_infinity()) return c2;
    return (c2 * P.x() + c1) * P.x() + c0;
  };
  for (const auto& P : projective_line(F)) {
    if (form_at(a, P).is_zero() && form_at(b, P).is_zero()) return P;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SearchParams> canonical_params(std::array<std::int64_t, 6> c, std::uint64_t p) {
  SearchParams out;
  for (std::size_t i = 0; i < 6; ++i) out.c[i] = reduce_mod(c[i], p);
  const auto lead = std::find_if(out.c.begin(), out.c.end(), [](std::uint64_t v) { return v != 0; });
  if (lead == out.c.end()) return std::nullopt;
  const std::uint64_t inv = mod_inverse(*lead, p);
  for (auto& v : out.c) v = v * inv % p;
  return out;
}

std::string to_string(const SearchParams& s, std::uint64_t p) {
  std::string out = "(";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) out += ",";
    out += std::to_string(signed_residue(s.c[i], p));
  }
  return out + ")";
}

CandidateStream::CandidateStream(std::uint64_t p) : p_(p), raw_(0) {
  if (p < 5 || !is_prime(p)) throw Error(Errc::BadPrime, "the search needs a prime p >= 5");
  std::uint64_t chart = 1;
  for (int i = 0; i < 6; ++i, chart *= p) raw_ += chart;
}

SearchParams CandidateStream::at(std::uint64_t k) const {
  if (k >= raw_) throw Error(Errc::BadIndex, "candidate index out of range");
  // Chart i (leading 1 at position i) holds p^{5-i} points.
  std::uint64_t size = 1;
  for (int i = 0; i < 5; ++i) size *= p_;
  for (std::size_t lead = 0; lead < 6; ++lead, size /= p_) {
    if (k < size) {
      SearchParams s;
      s.c[lead] = 1;
      for (std::size_t j = 5; j > lead; --j) {
        s.c[j] = k % p_;
        k /= p_;
      }
      return s;
    }
    k -= size;
  }
  return {};
}

bool CandidateStream::degree_two(const SearchParams& s) const {
  const Mod m{p_};
  return res2(m, Form{s.c[0], s.c[1], s.c[2]}, Form{s.c[3], s.c[4], s.c[5]}) != 0;
}

std::optional<SearchSolution> constraint_check(const SearchParams& s, const FieldPtr& fp) {
  const std::uint64_t p = fp->p();
  const Verdict v = fast_check(s, p);
  if (!v.ok) return std::nullopt;
  const Field& F = *fp;
  auto el = [&](std::uint64_t x) { return F.from_int(static_cast<std::int64_t>(x)); };
  RatMap f = RatMap::from_forms({el(s.c[2]), el(s.c[1]), el(s.c[0])}, {el(s.c[5]), el(s.c[4]), el(s.c[3])});
  const ProjPoint r2 = ProjPoint::affine(el(v.u) / el(v.v));

  FieldPtr fp2 = Field::make(p, 2);
  const Mod m{p};
  const Form n{s.c[0], s.c[1], s.c[2]};
  const Form d{s.c[3], s.c[4], s.c[5]};
  const std::uint64_t t0 = eval(m, n, 1, 1), t1 = eval(m, d, 1, 1);
  const std::uint64_t s0 = eval(m, n, v.u, v.v), s1 = eval(m, d, v.u, v.v);
  const auto p1 = common_root(*fp2, Form{t1, 0, m.sub(0, t0)}, n);
  const auto p2 = common_root(*fp2, Form{s1, 0, m.sub(0, s0)}, d);
  if (!p1 || !p2) return std::nullopt;
  return SearchSolution{s,
                        fp,
                        fp2,
                        std::move(f),
                        r2,
                        *p1,
                        *p2,
                        {"degree 2", "loop at 0", "loop at inf", "loop at 1", "ramified at 1",
                         "r2 distinct from 0, inf, 1", "loop at r2", "path 1 -> P1 -> 0", "path r2 -> P2 -> inf"}};
}

std::vector<SearchSolution> search(std::uint64_t p, unsigned jobs) {
  const CandidateStream stream(p);
  const FieldPtr fp = Field::make(p);
  jobs = std::clamp<unsigned>(jobs, 1, 64);
  std::vector<std::vector<SearchParams>> found(jobs);
  auto work = [&](unsigned shard) {
    for (std::uint64_t k = shard; k < stream.raw_count(); k += jobs) {
      const SearchParams s = stream.at(k);
      if (fast_check(s, p).ok) found[shard].push_back(s);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  std::vector<SearchParams> all;
  for (const auto& v : found) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  std::vector<SearchSolution> out;
  for (const auto& s : all) {
    if (auto sol = constraint_check(s, fp)) out.push_back(std::move(*sol));
  }
  return out;
}

bool verify_shape(const SearchSolution& s) {
  const Field& F2 = *s.fp2;
  const TowerGraph G = TowerGraph::build(s.f, RatMap::from_forms({F2.zero(), F2.zero(), F2.one()},
                                                                 {F2.one(), F2.zero(), F2.zero()}),
                                         s.fp2);
  auto has_edge = [&](const ProjPoint& a, const ProjPoint& b) {
    const auto out = G.out(G.vertex_of(a));
    return std::find(out.begin(), out.end(), G.vertex_of(b)) != out.end();
  };
  const ProjPoint one = ProjPoint::affine(F2.one());
  const ProjPoint zero = ProjPoint::affine(F2.zero());
  const ProjPoint inf = ProjPoint::infinity(F2);
  const ProjPoint r2 = ProjPoint::affine(F2.embed(s.r2.x()));
  const bool chains = has_edge(one, one) && has_edge(one, s.p1) && has_edge(s.p1, zero) && has_edge(zero, zero) &&
                      has_edge(r2, r2) && has_edge(r2, s.p2) && has_edge(s.p2, inf) && has_edge(inf, inf);
  if (!chains) return false;
  const bool ram = G.ramified_f(G.vertex_of(one)) && G.ramified_f(G.vertex_of(r2)) &&
                   G.ramified_g(G.vertex_of(zero)) && G.ramified_g(G.vertex_of(inf));
  if (!ram) return false;
  std::size_t singular = 0;
  for (const auto& c : G.components()) singular += c.cls == ComponentClass::Singular;
  return singular == 2;
}

}  // namespace towers
