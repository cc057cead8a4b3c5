#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "bier/error.hpp"

namespace bier {

// Expression templates off: values are stored and passed around freely.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using RationalVector = std::vector<Rational>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "p/q" or "p"; integers print without a denominator.
inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    const auto first = t.find_first_not_of(" \t");
    const auto last = t.find_last_not_of(" \t");
    t = first == std::string::npos ? std::string{} : t.substr(first, last - first + 1);
  };
  trim(s);
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
  trim(num);
  trim(den);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  require(valid_int(num) && valid_int(den) && den[0] != '-', ErrorCode::Parse,
          "not a rational: '" + std::string(text) + "'");
  const Integer d(den);
  require(d != 0, ErrorCode::Parse, "zero denominator: '" + std::string(text) + "'");
  return Rational(Integer(num), d);
}

inline Rational sum(const RationalVector& v) {
  Rational total = 0;
  for (const auto& x : v) total += x;
  return total;
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

inline RationalVector scaled(const RationalVector& v, const Rational& s) {
  RationalVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

inline void add_scaled(RationalVector& acc, const RationalVector& v, const Rational& s) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i] * s;
}

inline std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace bier
