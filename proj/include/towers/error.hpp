#pragma once

#include <stdexcept>
#include <string>

namespace towers {

enum class Errc {
  CompositeP,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  EvenOrCompositeP,
  FieldMismatch,
  ZeroPolynomial,
  ZeroFunction,
  ConstantMap,
  SyntaxError,
  DegreeZero,
  InsufficientField,
  NonzeroDegree,
  NotComplete,
  RamifiedT0,
  BadPrime,
  BadIndex,
  UnknownFormat,
  NoRegularComponent,
  UnsupportedTower,
  FieldTooLarge,
  UnknownFixture,
};

const char* to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind of failure, not the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace towers
