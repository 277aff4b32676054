#include "sosi/rational.hpp"

#include <cctype>
#include <numeric>

#include "sosi/errors.hpp"

namespace sosi {

std::int64_t common_denominator(std::span<const Rational> values) {
  std::int64_t l = 1;
  for (const Rational& r : values) {
    l = std::lcm(l, r.denominator());
    if (l > (std::int64_t{1} << 40)) throw InputError("weight denominators too large");
  }
  return l;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(const std::string& text, const std::string& whole) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InputError("not a rational number: '" + whole + "'");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size()) throw InputError("not a rational number: '" + whole + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace sosi
