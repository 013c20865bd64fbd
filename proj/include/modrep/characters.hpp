#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modrep/cyclotomic.hpp"
#include "modrep/group.hpp"
#include "modrep/matrix.hpp"
#include "modrep/representation.hpp"

namespace modrep {

/// Class function given by one exact value per listed class.
struct ClassFunction {
  std::vector<int> classes;  // indices into the group's class data
  std::vector<Cyclotomic> values;

  ClassFunction() = default;
  ClassFunction(std::vector<int> cls, std::vector<Cyclotomic> vals)
      : classes(std::move(cls)), values(std::move(vals)) {
    if (classes.size() != values.size())
      throw DimensionMismatch("class function shape");
  }

  friend ClassFunction operator*(const ClassFunction& a,
                                 const ClassFunction& b);
  friend ClassFunction operator+(const ClassFunction& a,
                                 const ClassFunction& b);
};

/// Ordinary character table: one row per irreducible, every conjugacy class,
/// rows sorted by (degree, coordinate-lexicographic values).
struct CharacterTable {
  const FiniteGroup* group = nullptr;
  std::vector<ClassFunction> rows;
  std::vector<std::int64_t> degrees;
  std::int64_t value_order = 1;  // values live in Q(zeta_e), e = exponent
};

/// Brauer character table: one row per simple kG-module on the p-regular
/// classes, with the chopped simples kept as provenance. Rows sorted by
/// (dimension, coordinate-lexicographic values).
struct BrauerCharacterTable {
  const FiniteGroup* group = nullptr;
  const FiniteField* field = nullptr;
  std::int64_t p = 0;
  std::vector<int> p_regular;  // ascending class indices
  std::vector<ClassFunction> rows;
  std::vector<std::int64_t> dims;
  std::vector<Representation> simples;
  std::int64_t value_order = 1;  // p'-part of the exponent
};

/// Exact ordinary character table by the Dixon–Schneider method: class
/// multiplication matrices are simultaneously diagonalized mod a prime
/// l ≡ 1 (mod exponent), l > 2·sqrt(|G|), and the values are recovered as
/// exact elements of Q(zeta_e). Row orthogonality is verified before
/// returning.
CharacterTable dixon_character_table(const FiniteGroup& g,
                                     std::int64_t prime_bound = 1000000);

/// Brauer character of a module at the given p-regular classes: eigenvalue
/// multiplicities of the class representative over a splitting extension,
/// lifted multiplicatively to roots of unity.
ClassFunction brauer_character(const Representation& m,
                               const std::vector<int>& classes);

/// Canonical "dimension + Brauer values" key identifying a simple module
/// over a splitting field.
std::string brauer_fingerprint(const Representation& m);

ClassFunction restrict_to_p_regular(const ClassFunction& chi,
                                    const ConjugacyClassData& ccd,
                                    std::int64_t p);

/// Exact coefficients of target in the given basis of class functions.
std::vector<Rational> decompose(const ClassFunction& target,
                                const std::vector<ClassFunction>& basis);

/// Finds all simple kG-modules by chopping the tensor algebra of a faithful
/// module (the natural module for matrix groups over p-power moduli, the
/// regular module otherwise), stopping when the count reaches the number of
/// p-regular classes.
BrauerCharacterTable brauer_character_table(const FiniteGroup& g,
                                            const FiniteField& field,
                                            std::uint64_t seed = 0);

/// p'-part of the group exponent (the order of the cyclotomic field housing
/// Brauer character values).
std::int64_t p_prime_part(std::int64_t n, std::int64_t p);

}  // namespace modrep
