#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace bondpoly {

// Exact rational scalar used for all weights, LP data and polytope
// coefficients. GMP keeps values canonical: lowest terms, denominator > 0.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& s, bool sign_ok) {
    if (s.empty()) return false;
    std::size_t i = (sign_ok && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!check_int(text, true)) throw std::invalid_argument("malformed rational: " + text);
    return Rational(Integer(text));
  }
  std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!check_int(num, true) || !check_int(den, false))
    throw std::invalid_argument("malformed rational: " + text);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  return Rational(Integer(num), d);
}

// Renders as "p" or "p/q", matching the graph/EF file grammars.
inline std::string rat_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace bondpoly
