#pragma once

#include <random>
#include <vector>

#include "modrep/finite_field.hpp"
#include "modrep/group.hpp"
#include "modrep/matrix.hpp"

namespace modrep {

/// Module over kG given by one invertible action matrix per group generator.
/// Vectors are rows and act on the right: g sends v to v·M_g, so the matrix
/// of a product is the product of the matrices in word order.
struct Representation {
  const FiniteGroup* group = nullptr;
  const FiniteField* field = nullptr;
  size_t dim = 0;
  std::vector<Matrix<FFElem>> action;  // one per generator

  FFElem zero() const { return FFElem(*field, 0); }
  FFElem one() const { return FFElem(*field, field->one()); }

  /// Action matrix of an arbitrary element, composed along its BFS word.
  Matrix<FFElem> matrix_of(int element) const;
};

/// Checks invertibility of the generator actions and multiplicativity on a
/// sample of random group words. Throws NotAnAction on failure.
void validate_representation(const Representation& r, std::uint64_t seed = 0,
                             int samples = 8);

Representation trivial_rep(const FiniteGroup& g, const FiniteField& field);

/// Permutation module from one permutation of {0..n-1} per generator; the
/// action is verified to extend to a homomorphism.
Representation perm_module(const FiniteGroup& g,
                           const std::vector<std::vector<int>>& perms,
                           const FiniteField& field);

/// Right-multiplication permutation action on the group itself.
Representation regular_module(const FiniteGroup& g, const FiniteField& field);

/// Conjugation action of g on a subgroup given by its element indices
/// (typically the kernel of a quotient map).
Representation conjugation_perm_module(const FiniteGroup& g,
                                       const std::vector<int>& subgroup,
                                       const FiniteField& field);

/// Natural module of a matrix group whose modulus is a power of the field
/// characteristic: generator entries reduced mod p land in the prime
/// subfield.
Representation natural_module(const FiniteGroup& g, const FiniteField& field);

Representation tensor(const Representation& a, const Representation& b);
Representation direct_sum(const Representation& a, const Representation& b);

/// dim Hom_kG(a, b): the solution space of T with A_i·T = T·B_i for all
/// generator actions.
size_t hom_dim(const Representation& a, const Representation& b);

}  // namespace modrep
