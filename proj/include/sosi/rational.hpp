#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <boost/rational.hpp>

// Under C++20 the mixed integer == rational template of Boost 1.74 is chosen
// as the rewritten candidate for its own body and recurses forever. Exact
// non-template overloads win overload resolution and break the cycle.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long long b) {
  return a == rational<std::int64_t>(static_cast<std::int64_t>(b));
}
}  // namespace boost

namespace sosi {

using Rational = boost::rational<std::int64_t>;

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

// Least common multiple of all denominators (1 for an empty span).
std::int64_t common_denominator(std::span<const Rational> values);

// "3", "-7/2". Inverse of parse_rational.
std::string to_string(const Rational& r);

// Accepts "p", "p/q" with optional surrounding blanks. Throws InputError.
Rational parse_rational(const std::string& text);

}  // namespace sosi
