#include "towers/error.hpp"

namespace towers {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::CompositeP: return "CompositeP";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::EvenOrCompositeP: return "EvenOrCompositeP";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::ConstantMap: return "ConstantMap";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::InsufficientField: return "InsufficientField";
    case Errc::NonzeroDegree: return "NonzeroDegree";
    case Errc::NotComplete: return "NotComplete";
    case Errc::RamifiedT0: return "RamifiedT0";
    case Errc::BadPrime: return "BadPrime";
    case Errc::BadIndex: return "BadIndex";
    case Errc::UnknownFormat: return "UnknownFormat";
    case Errc::NoRegularComponent: return "NoRegularComponent";
    case Errc::UnsupportedTower: return "UnsupportedTower";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace towers
