#include "mf24/rational.hpp"

#include <cctype>

#include "mf24/errors.hpp"

namespace mf24 {

Rational make_rational(long numerator, long denominator) {
  return make_rational(Integer(numerator), Integer(denominator));
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("make_rational: zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) {
    return x.get_num().get_str();
  }
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    ++i;
  }
  if (i == text.size()) {
    throw ParseError("expected digits", offset + i);
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("unexpected character '" + std::string(1, text[j]) + "'",
                       offset + j);
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, 0));
  }
  Integer num = parse_integer(text.substr(0, slash), 0);
  Integer den = parse_integer(text.substr(slash + 1), slash + 1);
  if (den == 0) {
    throw ParseError("zero denominator", slash + 1);
  }
  return make_rational(num, den);
}

}  // namespace mf24
