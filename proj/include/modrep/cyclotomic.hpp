#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modrep/rational.hpp"

namespace modrep {

/// Exact element of ℚ(ζ_m), stored as rational coordinates in the power
/// basis ζ⁰..ζ^{m−1} with multiplication taken modulo ζ^m − 1 (cyclic
/// convolution). Equality reduces the difference modulo the m-th cyclotomic
/// polynomial Φ_m, so distinct coordinate vectors can represent the same
/// number; canonical_coords() exposes the Φ_m-reduced representative.
///
/// Values of different orders interoperate: binary operations embed both
/// sides into ℚ(ζ_lcm) first. Order 1 holds the rationals.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : order_(1), c_(1, r) {}
  Cyclotomic(std::int64_t m, std::vector<Rational> coords);

  static Cyclotomic zeta(std::int64_t m, std::int64_t power = 1);

  std::int64_t order() const { return order_; }
  const std::vector<Rational>& coords() const { return c_; }

  /// Same number in ℚ(ζ_n); requires order() | n.
  Cyclotomic embedded(std::int64_t n) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational as_rational() const;

  /// Φ_m-reduced coordinates, zero-padded to length order(). Two values are
  /// equal iff their canonical coordinates agree (at a common order).
  std::vector<Rational> canonical_coords() const;

  /// Complex conjugate (ζ ↦ ζ^{−1}).
  Cyclotomic conj() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(std::int64_t n) const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  Cyclotomic& operator/=(const Cyclotomic& b) { return *this = *this / b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  /// Total order on canonical forms at a common embedding order; used for
  /// deterministic sorting of character rows. Returns <0, 0, >0.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;

 private:
  std::int64_t order_;
  std::vector<Rational> c_;  // length == order_
};

/// Φ_m as integer coefficients, low degree first (cached).
const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t m);

}  // namespace modrep
