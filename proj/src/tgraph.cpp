#include "towers/tgraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "towers/error.hpp"

namespace towers {

std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::DRegular: return "DRegular";
    case ComponentClass::Singular: return "Singular";
    case ComponentClass::Other: return "Other";
  }
  return "Other";
}

TowerGraph TowerGraph::build(const RatMap& f, const RatMap& g, FieldPtr field, unsigned jobs) {
  if (f.degree() != g.degree()) {
    throw Error(Errc::DegreeMismatch, "f and g must have the same degree");
  }
  const Field& F = *field;
  TowerGraph G(field, change_field(f, F), change_field(g, F));
  G.points_ = projective_line(F);
  const std::size_t n = G.points_.size();
  G.fval_.assign(n, 0);
  G.gval_.assign(n, 0);
  std::vector<char> rf(n, 0), rg(n, 0);

  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t v = lo; v < hi; ++v) {
      const ProjPoint& P = G.points_[v];
      G.fval_[v] = G.f_(P).index();
      G.gval_[v] = G.g_(P).index();
      rf[v] = ramification_index(G.f_, P) >= 2;
      rg[v] = ramification_index(G.g_, P) >= 2;
    }
  };
  jobs = std::clamp<unsigned>(jobs, 1, 64);
  if (jobs == 1 || n < 256) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + jobs - 1) / jobs;
    for (std::size_t lo = 0; lo < n; lo += chunk) pool.emplace_back(work, lo, std::min(n, lo + chunk));
    for (auto& t : pool) t.join();
  }
  G.ram_f_.assign(rf.begin(), rf.end());
  G.ram_g_.assign(rg.begin(), rg.end());

  // Join vertices on equal values: bucket Q by g(Q), then P -> bucket[f(P)].
  std::vector<std::vector<std::size_t>> by_g(n);
  for (std::size_t q = 0; q < n; ++q) by_g[G.gval_[q]].push_back(q);
  G.out_.assign(n, {});
  G.in_.assign(n, {});
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q : by_g[G.fval_[p]]) {
      G.out_[p].push_back(q);
      G.in_[q].push_back(p);
      ++G.edges_;
    }
  }
  return G;
}

std::vector<std::size_t> TowerGraph::singular_witness(std::span<const std::size_t> comp) const {
  // BFS seeded with the successors of f-ramified vertices, so that the
  // path has at least one edge.
  const std::size_t none = vertex_count();
  std::vector<std::size_t> parent(vertex_count(), none);
  std::vector<char> seed(vertex_count(), 0);
  std::deque<std::size_t> queue;
  for (std::size_t v : comp) {
    if (!ram_f_[v]) continue;
    for (std::size_t w : out_[v]) {
      if (parent[w] == none) {
        parent[w] = v;
        seed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (ram_g_[v]) {
      std::vector<std::size_t> path{v};
      std::size_t cur = v;
      while (!seed[cur]) path.push_back(cur = parent[cur]);
      path.push_back(parent[cur]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t w : out_[v]) {
      if (parent[w] == none) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return {};
}

std::vector<ComponentReport> TowerGraph::components() const {
  const std::size_t n = vertex_count();
  std::vector<std::size_t> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](std::size_t x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q : out_[p]) {
      const std::size_t a = find(p), b = find(q);
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<ComponentReport> out;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[root])].vertices.push_back(v);
  }
  const std::size_t d = degree();
  for (auto& c : out) {
    const bool regular = std::all_of(c.vertices.begin(), c.vertices.end(), [&](std::size_t v) {
      return out_[v].size() == d && in_[v].size() == d && !ram_f_[v] && !ram_g_[v];
    });
    if (regular) {
      c.cls = ComponentClass::DRegular;
      continue;
    }
    c.witness = singular_witness(c.vertices);
    if (!c.witness.empty()) c.cls = ComponentClass::Singular;
  }
  return out;
}

mpz_class TowerGraph::count_paths(unsigned n, std::optional<std::span<const std::size_t>> restrict) const {
  const std::size_t V = vertex_count();
  std::vector<char> inside(V, restrict ? 0 : 1);
  if (restrict) {
    for (std::size_t v : *restrict) inside.at(v) = 1;
  }
  // cnt[v] = number of paths with k edges starting at v.
  std::vector<mpz_class> cnt(V), next(V);
  for (std::size_t v = 0; v < V; ++v) cnt[v] = inside[v];
  for (unsigned k = 0; k < n; ++k) {
    for (std::size_t v = 0; v < V; ++v) {
      next[v] = 0;
      if (!inside[v]) continue;
      for (std::size_t w : out_[v]) next[v] += cnt[w];
    }
    std::swap(cnt, next);
  }
  mpz_class total = 0;
  for (const auto& c : cnt) total += c;
  return total;
}

mpz_class TowerGraph::singular_paths(unsigned n) const {
  const std::size_t V = vertex_count();
  std::vector<mpz_class> cnt(V), next(V);
  for (std::size_t v = 0; v < V; ++v) cnt[v] = ram_g_[v] ? 1 : 0;
  for (unsigned k = 0; k < n; ++k) {
    for (std::size_t v = 0; v < V; ++v) {
      next[v] = 0;
      for (std::size_t w : out_[v]) next[v] += cnt[w];
    }
    std::swap(cnt, next);
  }
  mpz_class total = 0;
  for (std::size_t v = 0; v < V; ++v) {
    if (ram_f_[v]) total += cnt[v];
  }
  return n == 0 ? mpz_class(0) : total;
}

std::vector<ComponentReport> dregular_components(const TowerGraph& g) {
  std::vector<ComponentReport> out;
  for (auto& c : g.components()) {
    if (c.cls == ComponentClass::DRegular) out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::string dot_export(const TowerGraph& g) {
  const auto comps = g.components();
  std::vector<ComponentClass> cls(g.vertex_count(), ComponentClass::Other);
  for (const auto& c : comps) {
    for (std::size_t v : c.vertices) cls[v] = c.cls;
  }
  std::ostringstream os;
  os << "digraph tower {\n";
  os << "  // f = " << g.f().to_string('x') << ", g = " << g.g().to_string('y') << ", F_" << g.field().order();
  if (!g.field().is_prime_field()) os << " mod " << g.field().modulus_string();
  os << "\n";
  os << "  node [shape=circle, style=filled, fillcolor=white];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.out(v).empty() && g.in(v).empty()) continue;
    const char* color = cls[v] == ComponentClass::DRegular ? "palegreen"
                        : cls[v] == ComponentClass::Singular ? "lightsalmon" : "white";
    const char* shape = g.ramified_f(v) && g.ramified_g(v) ? "doubleoctagon"
                        : g.ramified_f(v) ? "box" : g.ramified_g(v) ? "diamond" : "circle";
    os << "  v" << v << " [label=\"" << g.point(v).label() << "\", shape=" << shape
       << ", fillcolor=" << color << "];\n";
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t w : g.out(v)) os << "  v" << v << " -> v" << w << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string json_export(const TowerGraph& g, bool with_edges) {
  using nlohmann::json;
  const Field& F = g.field();
  json j;
  j["p"] = F.p();
  j["r"] = F.r();
  j["modulus"] = F.is_prime_field() ? json(nullptr) : json(F.modulus_string());
  j["f"] = g.f().to_string('x');
  j["g"] = g.g().to_string('y');
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  json comps = json::array();
  std::size_t regular = 0;
  for (const auto& c : g.components()) {
    if (c.vertices.size() == 1 && g.out(c.vertices[0]).empty() && g.in(c.vertices[0]).empty()) continue;
    json e;
    e["class"] = to_string(c.cls);
    json vs = json::array();
    for (std::size_t v : c.vertices) vs.push_back(g.point(v).label());
    e["vertices"] = vs;
    e["size"] = c.vertices.size();
    if (!c.witness.empty()) {
      json w = json::array();
      for (std::size_t v : c.witness) w.push_back(g.point(v).label());
      e["witness"] = w;
    }
    if (c.cls == ComponentClass::DRegular) ++regular;
    comps.push_back(std::move(e));
  }
  j["components"] = comps;
  j["dregular_count"] = regular;
  j["dregular_anomaly"] = regular > 1;
  if (with_edges) {
    json es = json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      for (std::size_t w : g.out(v)) es.push_back({g.point(v).label(), g.point(w).label()});
    }
    j["edges"] = es;
  }
  return j.dump(2) + "\n";
}

}  // namespace

std::string graph_export(const TowerGraph& g, std::string_view format, bool with_edges) {
  if (format == "dot") return dot_export(g);
  if (format == "json") return json_export(g, with_edges);
  throw Error(Errc::UnknownFormat, "unknown graph format \"" + std::string(format) + "\"");
}

}  // namespace towers
