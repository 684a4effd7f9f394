#pragma once

// JSON forms of the library's reports.

#include <vector>

#include "json.hpp"
#include "towers/divisor.hpp"
#include "towers/feq.hpp"
#include "towers/genus.hpp"
#include "towers/search.hpp"

namespace towers {

using nlohmann::json;

/// Symmetric residues for prime-field coefficients, "c0+c1*a" strings
/// otherwise; low degree first.
json coeffs_json(const Poly& f);
json elem_json(const Elem& x);
json poly_json(const Poly& f, char var = 'x');
json ratfun_json(const RatFun& r);

/// [{point, mult}, ...]
json divisor_json(const Divisor& d);
json points_json(const std::vector<ProjPoint>& s);

json functional_json(const FunctionalReport& r);
json criterion_json(const CriterionReport& r);
json solution_json(const SearchSolution& s);
/// Integers that do not fit a long are written as decimal strings.
json genus_json(const std::vector<GenusRow>& rows);

}  // namespace towers
