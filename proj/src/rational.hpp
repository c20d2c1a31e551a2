#pragma once

#include <boost/rational.hpp>
#include <string>

#include "errors.hpp"

namespace flopkit {

using Rational = boost::rational<long long>;

inline long long rational_floor(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline long long rational_ceil(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

// Accepts "3", "-2", "1/2", "-7/3".  Anything else is a DomainError.
inline Rational parse_rational(const std::string& s) {
  const auto bad = [&] { throw DomainError("malformed rational: '" + s + "'"); };
  const auto parse_int = [&](const std::string& t) -> long long {
    if (t.empty()) bad();
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) bad();
    for (std::size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') bad();
    try {
      return std::stoll(t);
    } catch (const std::exception&) {
      bad();
    }
    return 0;  // unreachable
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  const long long num = parse_int(s.substr(0, slash));
  const long long den = parse_int(s.substr(slash + 1));
  if (den == 0) bad();
  return Rational(num, den);
}

}  // namespace flopkit
