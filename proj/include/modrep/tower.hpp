#pragma once

#include <memory>
#include <string>
#include <vector>

#include "modrep/cde.hpp"
#include "modrep/characters.hpp"
#include "modrep/group.hpp"
#include "modrep/int_matrix.hpp"

namespace modrep {

/// Congruence tower G_1 <- G_2 <- ... with the kernel sections that drive
/// the Cartan recursion. sections()[i] is the kernel of maps[i]:
/// levels[i+1] -> levels[i], carried inside levels[i+1] with its conjugation
/// action.
struct TowerDescriptor {
  std::string family;  // "sl2" or "custom"
  std::int64_t p = 0;
  std::vector<std::shared_ptr<FiniteGroup>> levels;
  std::vector<QuotientMap> maps;

  size_t depth() const { return levels.size(); }
  const std::vector<int>& section(size_t i) const { return maps[i].kernel; }
};

/// Builds the SL2(Z/p^n) tower of the given depth. Kernels are verified to
/// be p-groups of equal order.
TowerDescriptor build_sl2_tower(std::int64_t p, int depth,
                                std::int64_t cap = 1000000);

/// Tower from explicit levels and connecting quotient maps (smallest level
/// first). Kernels are verified to be p-groups.
TowerDescriptor custom_tower(std::int64_t p,
                             std::vector<std::shared_ptr<FiniteGroup>> levels,
                             std::vector<QuotientMap> maps);

/// Brauer character of the conjugation permutation module on section i: the
/// value at a p-regular class is the number of fixed points of its
/// representative, which equals the lifted character on p-regular classes.
ClassFunction section_brauer_character(const TowerDescriptor& t, size_t i,
                                       const std::vector<int>& classes);

/// The matrix of [S] -> [X (x) S] on the simples of level i+1, computed by
/// decomposing (section character)·(Brauer character) in the Brauer basis.
/// Verifies integrality and the dimension count
/// sum_S dim(S)·B_{S,T} = |section|·dim(T).
IntMatrix b_matrix(const TowerDescriptor& t, size_t i,
                   const BrauerCharacterTable& bt);

struct UniformWitness {
  // canonical coset representative of section i (inside level i+2) and the
  // p-th power it maps to in section i+1
  std::vector<std::pair<int, int>> bijection;
};

/// Checks that u -> u^p induces a conjugation-equivariant bijection between
/// section i and section i+1, computed inside level i+2. Throws NotUniform
/// when the p-power map fails well-definedness, bijectivity or equivariance.
UniformWitness verify_uniform(const TowerDescriptor& t, size_t i);

/// C_n = B^{n-1} · C_1.
IntMatrix tower_cartan(const IntMatrix& c1, const IntMatrix& b, int n);

struct ClosedFormResult {
  IntMatrix cartan;
  BigInt determinant;
};

/// The closed-form Cartan matrix of SL2(Z/3^n) over GF(9) and its
/// determinant 3^{7n-5}; integrality of the entries is asserted.
ClosedFormResult sl2_closed_form(int n);

}  // namespace modrep
