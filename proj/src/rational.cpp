#include "socialchoice/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace socialchoice {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = !num.empty() && num.front() == '-';
  std::string_view digits = negative ? num.substr(1) : num;
  if (!all_digits(digits)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class numerator(std::string(num), 10);
  mpz_class denominator(1);
  if (den.data() != nullptr) {
    if (!all_digits(den)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    denominator = mpz_class(std::string(den), 10);
    if (denominator == 0) {
      throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

Rational rational_from_double(double value) {
  return Rational(value);
}

}  // namespace socialchoice
