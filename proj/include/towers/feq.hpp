#pragma once

// Completeness, the divisorial and functional regularness criteria, and the
// non-existence test for splitting sets, for correspondences f(x) = g(y) on
// P^1. All maps and point sets are over one working field, which must
// contain the fibres the checks look at.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "towers/divisor.hpp"
#include "towers/p1.hpp"
#include "towers/tgraph.hpp"

namespace towers {

struct Completeness {
  bool forward = false;   // g^{-1}(f(S)) is contained in S
  bool backward = false;  // f^{-1}(g(S)) is contained in S
};

Completeness is_complete(const RatMap& f, const RatMap& g, std::span<const ProjPoint> s);

/// f^* div(S0) - g^* div(S0) == D_f(S0) - D_g(S0).
bool divisorial_check(const RatMap& f, const RatMap& g, std::span<const ProjPoint> s0);

struct FunctionalReport {
  bool holds = false;
  std::optional<Elem> constant;  // c with rho^t (phi o f) = c (phi o g)
  RatFun rho;
  RatFun phi;
  int s = 0;
  int t = 0;
  // Exponents of the general statement; always 1 on P^1.
  int a = 1;
  int b = 1;
};

/// Builds rho with div rho = D_f(S0) - D_g(S0) and phi with
/// div phi = s div(T0) - t div(S0), then tests rho^t (phi o f) ~ phi o g.
/// Without `st`, s and t are the smallest positive integers with
/// t #S0 = s #T0. Throws NotComplete when the divisorial check fails for S0
/// and RamifiedT0 when T0 meets the branch locus of g.
FunctionalReport regularness_check(const RatMap& f, const RatMap& g, std::span<const ProjPoint> s0,
                                   std::span<const ProjPoint> t0,
                                   std::optional<std::pair<int, int>> st = std::nullopt);

enum class LenstraVerdict { NoSplittingSetPossible, Inconclusive };

std::string to_string(LenstraVerdict v);

/// For a complete S with S0 = f(S): NoSplittingSetPossible when
/// D_f(S0) = D_g(S0). The verdict assumes the correspondence is
/// irreducible, which is not checked. Throws NotComplete.
LenstraVerdict lenstra_check(const RatMap& f, const RatMap& g, std::span<const ProjPoint> s);

/// Product of (x - v) over the distinct affine f-values v on the first
/// DRegular component, returned over `prime` (the prime subfield). Throws
/// NoRegularComponent, or FieldMismatch if a coefficient is not in F_p.
Poly chi_polynomial(const TowerGraph& g, const Field& prime);

struct CriterionReport {
  Completeness complete;
  bool divisorial_holds = false;
  std::optional<FunctionalReport> functional;
};

/// is_complete on f^{-1}(S0), divisorial_check, and regularness_check when
/// S0 passes.
CriterionReport criterion_report(const RatMap& f, const RatMap& g, std::span<const ProjPoint> s0,
                                 std::span<const ProjPoint> t0);

/// Affine points of the roots of h in `field`, h's coefficients embedded
/// from the prime subfield.
std::vector<ProjPoint> root_points(const Poly& h, const Field& field);

/// The set f^{-1}(S0) over the map's field.
std::vector<ProjPoint> preimage(const RatMap& f, std::span<const ProjPoint> s0);

}  // namespace towers
