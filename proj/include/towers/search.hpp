#pragma once

// Search for degree-2 maps f over F_p such that the correspondence
// f(x) = y^2 has the singular graph
//
//   1 (loop) -> P1 -> 0 (loop)      r2 (loop) -> P2 -> inf (loop)
//
// with 1, r2 the ramification points of f.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "towers/p1.hpp"

namespace towers {

/// (a2 : a1 : a0 : b2 : b1 : b0) in P^5(F_p), first nonzero coordinate 1,
/// for f = (a2 x^2 + a1 x + a0) / (b2 x^2 + b1 x + b0).
struct SearchParams {
  std::array<std::uint64_t, 6> c{};

  friend bool operator==(const SearchParams&, const SearchParams&) = default;
  friend auto operator<=>(const SearchParams&, const SearchParams&) = default;
};

/// Canonical scaling of six residues mod p; nullopt for the zero vector.
std::optional<SearchParams> canonical_params(std::array<std::int64_t, 6> c, std::uint64_t p);

std::string to_string(const SearchParams& s, std::uint64_t p);

/// All points of P^5(F_p), indexed 0 .. raw_count()-1 chart by chart (the
/// position of the leading 1), each chart in base-p order.
class CandidateStream {
 public:
  explicit CandidateStream(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t raw_count() const { return raw_; }
  SearchParams at(std::uint64_t k) const;
  /// Whether the parameters define a map of degree exactly 2.
  bool degree_two(const SearchParams& s) const;

 private:
  std::uint64_t p_;
  std::uint64_t raw_;
};

struct SearchSolution {
  SearchParams params;
  FieldPtr fp;
  FieldPtr fp2;
  RatMap f;            // over fp
  ProjPoint r2;        // second ramification point, over fp
  ProjPoint p1;        // f(1) = p1^2 and f(p1) = 0, over fp2
  ProjPoint p2;        // f(r2) = p2^2 and f(p2) = inf, over fp2
  std::vector<std::string> satisfied;
};

/// Checks the constraints on one candidate; nullopt when any fails.
std::optional<SearchSolution> constraint_check(const SearchParams& s, const FieldPtr& fp);

/// Every solution over F_p, sorted by parameters. Throws BadPrime for p < 5.
std::vector<SearchSolution> search(std::uint64_t p, unsigned jobs = 1);

/// The graph of f(x) = y^2 over F_{p^2} contains both prescribed singular
/// chains, through the certificate's witnesses.
bool verify_shape(const SearchSolution& s);

}  // namespace towers
