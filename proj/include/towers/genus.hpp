#pragma once

// Genus and singularity sequences of the tower y^2 = (x^2+x)/(3x-1), and
// the point-count / genus ratio read off its splitting component.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "towers/tgraph.hpp"

namespace towers {

/// Delta_n = 2^{n-1} - 2^{floor(n/2)}; throws BadIndex for n < 2.
mpz_class delta(unsigned n);

/// g_n = 2^n - (2 + n mod 2) 2^{floor(n/2)} + 1; throws BadIndex for n < 1.
mpz_class genus_closed(unsigned n);

/// g_n = 1 + (n-2) 2^{n-1} - sum_{i=2}^{n} 2^{n-i} Delta_i; throws BadIndex
/// for n < 2.
mpz_class genus_sum(unsigned n);

struct GenusRow {
  unsigned n = 0;
  std::optional<mpz_class> delta;  // absent for n = 1
  mpz_class genus;
  mpz_class n_lower;               // paths with n-1 edges on the DRegular component
  std::optional<double> ratio;     // n_lower / genus, absent when genus = 0
};

/// Rows for 1 <= n <= n_max. The formulas only describe the tower named
/// "new-tower"; any other name throws UnsupportedTower. Throws
/// NoRegularComponent when the graph has no DRegular component.
std::vector<GenusRow> asymptotic_report(const std::string& tower, unsigned n_max, const TowerGraph& graph);

}  // namespace towers
