#include "permdesign/rational.hpp"

#include "permdesign/errors.hpp"

#include <cctype>

namespace permdesign {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty())
    return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size())
    return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      return false;
  }
  return true;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

} // namespace

std::string to_string(const Int& value) { return value.str(); }

std::string to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Int parse_int(std::string_view text) {
  text = trim(text);
  if (!is_integer_literal(text))
    throw error("not an integer: '" + std::string(text) + "'");
  return Int(std::string(text));
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  return make_rational(std::move(num), std::move(den));
}

Rational make_rational(Int numerator, Int denominator) {
  if (denominator == 0)
    throw error("rational with zero denominator");
  return Rational(std::move(numerator), std::move(denominator));
}

} // namespace permdesign
