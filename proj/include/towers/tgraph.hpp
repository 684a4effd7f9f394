#pragma once

// The arithmetic graph on P^1(F) of the correspondence f(x) = g(y): an edge
// P -> Q for every pair with f(P) = g(Q).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "towers/p1.hpp"

namespace towers {

enum class ComponentClass { DRegular, Singular, Other };

std::string to_string(ComponentClass c);

struct ComponentReport {
  std::vector<std::size_t> vertices;  // ascending vertex indices
  ComponentClass cls = ComponentClass::Other;
  /// For Singular components: a directed path from a vertex ramified for f
  /// to a vertex ramified for g.
  std::vector<std::size_t> witness;
};

class TowerGraph {
 public:
  /// f and g must have the same degree; their coefficients are carried into
  /// `field`. Values are computed on `jobs` threads; the result does not
  /// depend on the thread count.
  static TowerGraph build(const RatMap& f, const RatMap& g, FieldPtr field, unsigned jobs = 1);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const RatMap& f() const { return f_; }
  const RatMap& g() const { return g_; }
  unsigned degree() const { return f_.degree(); }

  std::size_t vertex_count() const { return points_.size(); }
  std::size_t edge_count() const { return edges_; }
  const ProjPoint& point(std::size_t v) const { return points_[v]; }
  std::size_t vertex_of(const ProjPoint& p) const { return p.index(); }

  std::span<const std::size_t> out(std::size_t v) const { return out_[v]; }
  std::span<const std::size_t> in(std::size_t v) const { return in_[v]; }
  bool ramified_f(std::size_t v) const { return ram_f_[v]; }
  bool ramified_g(std::size_t v) const { return ram_g_[v]; }
  /// Index of the point f(P), resp. g(P).
  std::size_t f_value(std::size_t v) const { return fval_[v]; }
  std::size_t g_value(std::size_t v) const { return gval_[v]; }

  /// Weakly connected components, ordered by their smallest vertex.
  std::vector<ComponentReport> components() const;

  /// Directed paths with n edges whose vertices all lie in `restrict` (the
  /// whole graph when absent).
  mpz_class count_paths(unsigned n, std::optional<std::span<const std::size_t>> restrict = std::nullopt) const;

  /// Paths with n >= 1 edges from a vertex ramified for f to one ramified
  /// for g.
  mpz_class singular_paths(unsigned n) const;

 private:
  TowerGraph(FieldPtr field, RatMap f, RatMap g) : field_(std::move(field)), f_(std::move(f)), g_(std::move(g)) {}

  std::vector<std::size_t> singular_witness(std::span<const std::size_t> comp) const;

  FieldPtr field_;
  RatMap f_;
  RatMap g_;
  std::vector<ProjPoint> points_;
  std::vector<std::size_t> fval_;
  std::vector<std::size_t> gval_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<bool> ram_f_;
  std::vector<bool> ram_g_;
  std::size_t edges_ = 0;
};

/// The DRegular components among components(). More than one is unexpected
/// for the towers studied here; callers that need a unique one should check.
std::vector<ComponentReport> dregular_components(const TowerGraph& g);

/// "dot" or "json"; throws UnknownFormat otherwise.
std::string graph_export(const TowerGraph& g, std::string_view format, bool with_edges = false);

}  // namespace towers
