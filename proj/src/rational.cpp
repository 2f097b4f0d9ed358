#include "genform/rational.hpp"

#include <stdexcept>

namespace genform {

std::string to_string(const Rational& r) {
  return r.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

} // namespace genform
