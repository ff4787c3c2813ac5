#include "goodsets/rational.hpp"

#include <cctype>

#include "goodsets/errors.hpp"

namespace goodsets {

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(den_text);
  if (den == 0) {
    throw InputError("zero denominator: '" + std::string(text) + "'");
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

}  // namespace goodsets
