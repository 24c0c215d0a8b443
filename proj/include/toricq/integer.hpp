#pragma once

// Arbitrary-precision scalars and the handful of number-theoretic helpers the
// lattice code needs.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace toricq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct Bezout {
  Integer g, x, y;
};

inline Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

// Floor division and the matching nonnegative remainder for b > 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor_mod(const Integer& a, const Integer& b) {
  return a - floor_div(a, b) * b;
}

inline std::int64_t to_int64(const Integer& a) {
  if (a > std::numeric_limits<std::int64_t>::max() ||
      a < std::numeric_limits<std::int64_t>::min())
    throw Error("integer exponent out of range: " + a.str());
  return static_cast<std::int64_t>(a);
}

inline Integer ipow(Integer base, std::uint64_t exp) {
  Integer result = 1;
  while (exp) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

inline Rational rpow(const Rational& base, std::int64_t exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw Error("zero raised to a negative power");
    return Rational(0);
  }
  const auto e = static_cast<std::uint64_t>(exp < 0 ? -exp : exp);
  Rational r(ipow(numerator(base), e), ipow(denominator(base), e));
  return exp < 0 ? Rational(1) / r : r;
}

// Largest r >= 0 with r^k <= a, for a >= 0 and k >= 1.
inline Integer integer_root_floor(const Integer& a, std::uint64_t k) {
  if (a < 0) throw Error("integer_root_floor of a negative number");
  if (a < 2 || k == 1) return a;
  Integer lo = 0;
  Integer hi = Integer(1) << (msb(a) / k + 1);
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    if (ipow(mid, k) <= a)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

// Exact k-th root of an integer if one exists in Z. Negative inputs only
// have integer roots for odd k.
inline std::optional<Integer> exact_integer_root(const Integer& a, std::uint64_t k) {
  if (a < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = exact_integer_root(-a, k);
    if (!r) return std::nullopt;
    return Integer(-*r);
  }
  Integer r = integer_root_floor(a, k);
  if (ipow(r, k) == a) return r;
  return std::nullopt;
}

inline std::optional<Rational> exact_rational_root(const Rational& q, std::uint64_t k) {
  auto n = exact_integer_root(numerator(q), k);
  if (!n) return std::nullopt;
  auto d = exact_integer_root(denominator(q), k);
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error("malformed integer literal '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw Error("malformed integer literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

// Accepts "p", "p/q" with q != 0.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace toricq
