#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modrep/errors.hpp"

namespace modrep {

class Cyclotomic;

/// 𝔽_{p^e} with every element enumerated. An element is an int32 code that
/// packs its polynomial-basis coordinates base p (c0 + c1*p + ...), so codes
/// range over [0, p^e). Multiplication and inversion go through exp/log
/// tables built from a fixed verified generator of the unit group; addition
/// works digit-wise on the packed coordinates.
///
/// Fields are interned: make_field returns a reference valid for the program
/// lifetime, and two calls with the same (p, e, modulus) return the same
/// object. Instances are immutable and safe to share across threads.
class FiniteField {
 public:
  static constexpr std::int64_t kMaxOrder = std::int64_t(1) << 20;

  std::int64_t characteristic() const { return p_; }
  int degree() const { return e_; }
  std::int64_t order() const { return q_; }
  /// Monic modulus as coefficient list c0..ce (ce = 1).
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  std::int32_t generator() const { return gen_; }

  std::int32_t zero() const { return 0; }
  std::int32_t one() const { return one_; }

  std::int32_t add(std::int32_t a, std::int32_t b) const;
  std::int32_t sub(std::int32_t a, std::int32_t b) const;
  std::int32_t neg(std::int32_t a) const;
  std::int32_t mul(std::int32_t a, std::int32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::int64_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  std::int32_t inv(std::int32_t a) const {
    if (a == 0) throw NotInvertible("zero has no inverse");
    std::int64_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
  }
  std::int32_t pow(std::int32_t a, std::int64_t n) const;

  /// Exponent of the fixed generator: g^dlog(a) = a. Throws ZeroElement on 0.
  std::int64_t dlog(std::int32_t a) const {
    if (a == 0) throw ZeroElement("discrete log of zero");
    return log_[a];
  }
  std::int64_t mult_order(std::int32_t a) const;

  std::vector<std::int64_t> coords(std::int32_t code) const;
  std::int32_t from_coords(const std::vector<std::int64_t>& c) const;
  /// n mod p embedded in the prime subfield.
  std::int32_t from_int(std::int64_t n) const;

  std::string describe() const;

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

 private:
  FiniteField() = default;
  friend const FiniteField& make_field(
      std::int64_t, int, const std::optional<std::vector<std::int64_t>>&);

  std::int64_t p_ = 0;
  int e_ = 0;
  std::int64_t q_ = 0;
  std::int32_t one_ = 0;
  std::int32_t gen_ = 0;
  std::vector<std::int64_t> modulus_;
  std::vector<std::int32_t> exp_;  // size q-1, exp_[i] = code of g^i
  std::vector<std::int32_t> log_;  // size q, log_[0] unused
};

/// Builds (or fetches) 𝔽_{p^e}. When modulus is omitted, the search picks the
/// irreducible monic polynomial whose packed coefficient code is smallest,
/// which is reproducible across runs; for 𝔽₉ this yields x²+1.
const FiniteField& make_field(
    std::int64_t p, int e,
    const std::optional<std::vector<std::int64_t>>& modulus = std::nullopt);

/// A field element as (field, code). A default-constructed FFElem is a
/// field-less zero that coerces to the other operand's field, so zero-filled
/// containers work without carrying a field everywhere.
class FFElem {
 public:
  FFElem() = default;
  FFElem(const FiniteField& f, std::int32_t code) : f_(&f), code_(code) {}

  const FiniteField* field() const { return f_; }
  std::int32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  std::vector<std::int64_t> coords() const;

  friend FFElem operator+(const FFElem& a, const FFElem& b);
  friend FFElem operator-(const FFElem& a, const FFElem& b);
  friend FFElem operator*(const FFElem& a, const FFElem& b);
  friend FFElem operator/(const FFElem& a, const FFElem& b);
  FFElem operator-() const;
  FFElem& operator+=(const FFElem& b) { return *this = *this + b; }
  FFElem& operator-=(const FFElem& b) { return *this = *this - b; }
  FFElem& operator*=(const FFElem& b) { return *this = *this * b; }
  FFElem& operator/=(const FFElem& b) { return *this = *this / b; }
  friend bool operator==(const FFElem& a, const FFElem& b);
  friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }

 private:
  const FiniteField* f_ = nullptr;
  std::int32_t code_ = 0;
};

inline FFElem ff(const FiniteField& f, std::int64_t n) {
  return FFElem(f, f.from_int(n));
}

std::int64_t discrete_log(const FFElem& x);

/// Multiplicative lift 𝔽^× → ⟨ζ_{q−1}⟩: x = g^t ↦ ζ_{q−1}^t.
Cyclotomic teichmuller_lift(const FFElem& x);

}  // namespace modrep
