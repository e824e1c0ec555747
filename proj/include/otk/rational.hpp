#pragma once

// Exact rational coordinates.  All geometry in this library is computed over
// arbitrary-precision rationals; there is deliberately no floating-point
// fallback anywhere.  The number type is boost::multiprecision::cpp_rational,
// which keeps values canonical (gcd(num,den)=1, den>0).  This header adds the
// three accepted text forms: integer, p/q, and decimal.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>

#include "otk/error.hpp"

namespace otk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const BigInt& z) { return z.sign(); }

// Parses "7", "-3/4", "2.5", "-.125".  Anything else is a parse error.
inline Rational parse_rational(const std::string& tok) {
  if (tok.empty()) fail(errc::parse_error, "empty coordinate token");
  std::size_t pos = 0;
  bool neg = false;
  if (tok[pos] == '+' || tok[pos] == '-') neg = (tok[pos++] == '-');

  auto digits = [&](std::string& out) {
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
      out.push_back(tok[pos++]);
  };

  std::string ipart, fpart;
  digits(ipart);

  if (pos < tok.size() && tok[pos] == '/') {
    ++pos;
    std::string den;
    digits(den);
    if (ipart.empty() || den.empty() || pos != tok.size())
      fail(errc::parse_error, "bad rational token '" + tok + "'");
    BigInt d(den);
    if (d == 0) fail(errc::parse_error, "zero denominator in '" + tok + "'");
    Rational r(BigInt(ipart), d);
    return neg ? Rational(-r) : r;
  }
  if (pos < tok.size() && tok[pos] == '.') {
    ++pos;
    digits(fpart);
  }
  if (pos != tok.size() || (ipart.empty() && fpart.empty()))
    fail(errc::parse_error, "bad coordinate token '" + tok + "'");

  BigInt num = ipart.empty() ? BigInt(0) : BigInt(ipart);
  BigInt den = 1;
  for (char c : fpart) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

// Emits the canonical text form: "p" when integral, else "p/q".
inline std::string format_rational(const Rational& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

}  // namespace otk
