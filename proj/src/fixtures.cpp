#include "towers/fixtures.hpp"

#include "towers/error.hpp"
#include "towers/feq.hpp"
#include "towers/parse.hpp"

namespace towers {

const std::vector<FixtureSpec>& fixture_specs() {
  static const std::vector<FixtureSpec> specs{
      {"new-tower", "(x^2+x)/(3*x-1)", "y^2", {"0", "1", "1/9", "inf"}, {"1", "-1/3"}, {"0", "inf"}},
      {"gs-tower", "(x^2+1)/(2*x)", "y^2", {"1", "-1", "0", "inf"}, {"1", "-1"}, {"0", "inf"}},
      {"type-a-toy", "x^2+x", "y^2", {"inf"}, {}, {}},
  };
  return specs;
}

const FixtureSpec& fixture_spec(std::string_view name) {
  for (const auto& s : fixture_specs()) {
    if (s.name == name) return s;
  }
  throw Error(Errc::UnknownFixture, "unknown fixture \"" + std::string(name) + "\"");
}

std::optional<std::vector<std::int64_t>> fixture_modulus(std::uint64_t p, unsigned r) {
  if (p == 5 && r == 2) return std::vector<std::int64_t>{2, -1, 1};
  return std::nullopt;
}

Fixture load_fixture(std::string_view name, FieldPtr field) {
  const FixtureSpec& spec = fixture_spec(name);
  const Field& F = *field;
  if (spec.name != "type-a-toy" && F.p() < 5) {
    throw Error(Errc::BadPrime, spec.name + " needs characteristic at least 5");
  }
  std::vector<ProjPoint> s0;
  for (const auto& t : spec.s0) s0.push_back(parse_point(t, F));
  RatMap f = map_parse(spec.f, F);
  RatMap g = map_parse(spec.g, F);
  Divisor rho(F);
  for (const auto& t : spec.rho_zeros) rho.add(parse_point(t, F), 1);
  for (const auto& t : spec.rho_poles) rho.add(parse_point(t, F), -1);
  auto s = preimage(f, s0);
  const Completeness c = is_complete(f, g, s);
  if (!c.forward || !c.backward || !divisorial_check(f, g, s0)) {
    throw Error(Errc::NotComplete, "fixture " + spec.name + " fails its completeness check over F_" +
                                       std::to_string(F.order()));
  }
  return Fixture{spec.name, std::move(field), std::move(f), std::move(g), std::move(s0), std::move(s),
                 divisor_to_function(rho)};
}

}  // namespace towers
