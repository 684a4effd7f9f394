#pragma once

// The named towers used throughout: new-tower y^2 = (x^2+x)/(3x-1),
// gs-tower y^2 = (x^2+1)/(2x), and type-a-toy y^2 = x^2+x.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "towers/divisor.hpp"
#include "towers/p1.hpp"

namespace towers {

struct FixtureSpec {
  std::string name;
  std::string f;
  std::string g;
  std::vector<std::string> s0;
  /// Zeros and poles of rho; rho = 1 when both are empty.
  std::vector<std::string> rho_zeros;
  std::vector<std::string> rho_poles;
};

const std::vector<FixtureSpec>& fixture_specs();

/// Throws UnknownFixture.
const FixtureSpec& fixture_spec(std::string_view name);

struct Fixture {
  std::string name;
  FieldPtr field;
  RatMap f;
  RatMap g;
  std::vector<ProjPoint> s0;
  std::vector<ProjPoint> s;   // f^{-1}(S0)
  RatFun rho;
};

/// Pinned extension modulus for the fixtures, a^2 - a + 2 for F_25, so the
/// vertex labels match the reference picture; nullopt elsewhere.
std::optional<std::vector<std::int64_t>> fixture_modulus(std::uint64_t p, unsigned r);

/// Builds the fixture over `field` and checks that S is complete and that
/// S0 passes the divisorial criterion; throws NotComplete otherwise, and
/// InsufficientField when S is not rational over the field.
Fixture load_fixture(std::string_view name, FieldPtr field);

}  // namespace towers
