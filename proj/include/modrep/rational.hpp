#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "modrep/errors.hpp"

namespace modrep {

// All scalar arithmetic in this library is exact. BigInt/Rational are the
// arbitrary-precision integer and reduced-fraction types everything else
// is built on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline BigInt denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}
inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt int_pow(const BigInt& base, std::uint64_t exp) {
  BigInt acc(1), b(base);
  while (exp != 0) {
    if (exp & 1) acc *= b;
    b *= b;
    exp >>= 1;
  }
  return acc;
}

// v = p^k * u with p coprime to u; returns k. p must be >= 2, v nonzero.
inline std::uint64_t p_adic_valuation(BigInt v, const BigInt& p) {
  if (v == 0) throw ZeroElement("p_adic_valuation of zero");
  if (v < 0) v = -v;
  std::uint64_t k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

inline bool is_p_power(const BigInt& v, const BigInt& p) {
  if (v <= 0) return false;
  BigInt r = v;
  while (r % p == 0) r /= p;
  return r == 1;
}

inline std::string rational_to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline bool to_int64(const BigInt& v, std::int64_t& out) {
  if (v > std::numeric_limits<std::int64_t>::max()) return false;
  if (v < std::numeric_limits<std::int64_t>::min()) return false;
  out = static_cast<std::int64_t>(v);
  return true;
}

}  // namespace modrep
