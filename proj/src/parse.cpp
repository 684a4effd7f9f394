#include "towers/parse.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "towers/error.hpp"

namespace towers {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string_view vars) : s_(text), vars_(vars) {}

  bool done() {
    skip();
    return i_ == s_.size();
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  std::vector<std::int64_t> poly() {
    std::vector<std::int64_t> out;
    bool first = true;
    while (true) {
      int sign = 1;
      if (accept('-')) sign = -1;
      else if (!first && !accept('+')) break;
      else if (first) accept('+');
      const auto [c, k] = term();
      if (out.size() <= k) out.resize(k + 1, 0);
      out[k] += sign * c;
      first = false;
    }
    return out;
  }

  char var() const { return var_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::SyntaxError, what + " at offset " + std::to_string(i_) + " in \"" + std::string(s_) + "\"");
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  std::int64_t integer() {
    skip();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected an integer");
    std::int64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail("integer too large");
      v = v * 10 + (s_[i_++] - '0');
    }
    return v;
  }

  bool at_var() {
    skip();
    return i_ < s_.size() && vars_.find(s_[i_]) != std::string_view::npos;
  }

  std::size_t power() {
    const char v = s_[i_++];
    if (var_ == 0) var_ = v;
    else if (var_ != v) fail("mixed variables");
    if (!accept('^')) return 1;
    const std::int64_t k = integer();
    if (k > 1 << 20) fail("exponent too large");
    return static_cast<std::size_t>(k);
  }

  std::pair<std::int64_t, std::size_t> term() {
    if (at_var()) return {1, power()};
    const std::int64_t c = integer();
    if (!accept('*')) return {c, 0};
    if (!at_var()) fail("expected a variable after '*'");
    return {c, power()};
  }

  std::string_view s_;
  std::string_view vars_;
  std::size_t i_ = 0;
  char var_ = 0;
};

Poly to_poly(const std::vector<std::int64_t>& c, const Field& field) { return Poly::from_ints(field, c); }

std::vector<std::int64_t> operand(Parser& ps) {
  if (ps.accept('(')) {
    auto out = ps.poly();
    ps.expect(')');
    return out;
  }
  return ps.poly();
}

}  // namespace

std::vector<std::int64_t> parse_int_poly(std::string_view text, char var) {
  const char vars[2] = {var, '\0'};
  Parser ps(text, std::string_view(vars, 1));
  auto out = ps.poly();
  if (!ps.done()) ps.fail("trailing input");
  return out;
}

Poly parse_poly(std::string_view text, const Field& field) {
  Parser ps(text, "xy");
  auto out = operand(ps);
  if (!ps.done()) ps.fail("trailing input");
  return to_poly(out, field);
}

RatMap map_parse(std::string_view text, const Field& field) {
  Parser ps(text, "xy");
  const auto num = operand(ps);
  std::vector<std::int64_t> den{1};
  if (ps.accept('/')) {
    if (!ps.at('(')) ps.fail("denominator must be parenthesised");
    den = operand(ps);
  }
  if (!ps.done()) ps.fail("trailing input");
  const Poly d = to_poly(den, field);
  if (d.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator in \"" + std::string(text) + "\"");
  return RatMap::from_fraction(to_poly(num, field), d);
}

ProjPoint parse_point(std::string_view text, const Field& field) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "inf" || text == "oo") return ProjPoint::infinity(field);
  const auto slash = text.find('/');
  auto value = [&](std::string_view part) {
    const Poly c = parse_poly(part, field);
    if (c.degree() > 0) throw Error(Errc::SyntaxError, "a point is a constant: \"" + std::string(text) + "\"");
    return c.coeff(0);
  };
  if (slash == std::string_view::npos) return ProjPoint::affine(value(text));
  const Elem den = value(text.substr(slash + 1));
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "zero denominator in point \"" + std::string(text) + "\"");
  return ProjPoint::affine(value(text.substr(0, slash)) / den);
}

}  // namespace towers
