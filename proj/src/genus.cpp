#include "towers/genus.hpp"

#include "towers/error.hpp"

namespace towers {

namespace {

mpz_class two_pow(unsigned k) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, k);
  return out;
}

}  // namespace

mpz_class delta(unsigned n) {
  if (n < 2) throw Error(Errc::BadIndex, "Delta_n needs n >= 2");
  return two_pow(n - 1) - two_pow(n / 2);
}

mpz_class genus_closed(unsigned n) {
  if (n < 1) throw Error(Errc::BadIndex, "g_n needs n >= 1");
  return two_pow(n) - (2 + n % 2) * two_pow(n / 2) + 1;
}

mpz_class genus_sum(unsigned n) {
  if (n < 2) throw Error(Errc::BadIndex, "the genus sum needs n >= 2");
  mpz_class g = 1 + mpz_class(n - 2) * two_pow(n - 1);
  for (unsigned i = 2; i <= n; ++i) g -= two_pow(n - i) * delta(i);
  return g;
}

std::vector<GenusRow> asymptotic_report(const std::string& tower, unsigned n_max, const TowerGraph& graph) {
  if (tower != "new-tower") {
    throw Error(Errc::UnsupportedTower, "genus formulas are only known for new-tower, not " + tower);
  }
  const auto regular = dregular_components(graph);
  if (regular.empty()) throw Error(Errc::NoRegularComponent, "the graph has no DRegular component");
  const auto& comp = regular.front().vertices;
  std::vector<GenusRow> out;
  for (unsigned n = 1; n <= n_max; ++n) {
    GenusRow row;
    row.n = n;
    if (n >= 2) row.delta = delta(n);
    row.genus = genus_closed(n);
    row.n_lower = graph.count_paths(n - 1, comp);
    if (row.genus != 0) row.ratio = mpq_class(row.n_lower, row.genus).get_d();
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace towers
