#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace loopmult {

// Exact scalars. cpp_rational keeps numerator/denominator reduced with the
// denominator positive, so equality is plain value equality.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  return Rat(Int(num), Int(den));
}

inline std::string to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p" or "p/q" with optional sign on p, decimal digits only.
inline Rat parse_rational(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("parse_rational: bad literal '" + s + "'"); };
  std::size_t i = 0, n = s.size();
  while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  std::size_t e = n;
  while (e > i && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (i >= e) bad();
  std::string body = s.substr(i, e - i);
  auto slash = body.find('/');
  auto parse_int = [&](const std::string& t) -> Int {
    if (t.empty()) bad();
    std::size_t j = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (j == t.size()) bad();
    for (; j < t.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(t[j]))) bad();
    return Int(t);
  };
  if (slash == std::string::npos) return Rat(parse_int(body));
  Int num = parse_int(body.substr(0, slash));
  Int den = parse_int(body.substr(slash + 1));
  if (den == 0) bad();
  return Rat(num, den);
}

inline Rat factorial_inv(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rat(Int(1), f);
}

}  // namespace loopmult
