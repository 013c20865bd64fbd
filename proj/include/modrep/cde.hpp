#pragma once

#include <cstdint>
#include <vector>

#include "modrep/characters.hpp"
#include "modrep/int_matrix.hpp"

namespace modrep {

enum class BasisTag {
  OrdinaryIrreducibles,        // R_K
  Simples,                     // R_k
  ProjectiveIndecomposables,   // P_k
};

/// Integer vector in one of the three distinguished bases. The tag guards
/// against composing maps that are not naturally composable.
struct GrothendieckVector {
  BasisTag tag;
  std::vector<BigInt> coords;

  static GrothendieckVector basis_vector(BasisTag tag, size_t size, size_t i) {
    GrothendieckVector v{tag, std::vector<BigInt>(size, BigInt(0))};
    v.coords[i] = 1;
    return v;
  }
};

/// d_{chi,S}: rows indexed by ordinary irreducibles (character table order),
/// columns by simples (Brauer table order).
struct DecompositionMatrix {
  IntMatrix d;
};

/// C = DᵀD: symmetric, positive definite, determinant a power of p.
struct CartanMatrix {
  IntMatrix c;
};

/// Blocks computed by linking: connected components of the bipartite graph
/// on (ordinary irreducibles, simples) with an edge where d_{chi,S} != 0.
struct BlockPartition {
  std::vector<int> simple_block;    // simple index -> block id
  std::vector<int> ordinary_block;  // ordinary index -> block id
  int block_count = 0;
};

/// Row chi of D is the decomposition of chi restricted to p-regular classes
/// in the Brauer basis; entries are verified nonnegative integers.
DecompositionMatrix decomposition_matrix(const CharacterTable& ct,
                                         const BrauerCharacterTable& bt);

CartanMatrix cartan_matrix(const DecompositionMatrix& d, std::int64_t p);

/// d: R_K -> R_k, coordinates Dᵀ·v.
GrothendieckVector apply_d(const GrothendieckVector& v,
                           const DecompositionMatrix& d);

/// e: P_k -> R_K, coordinates D·v.
GrothendieckVector apply_e(const GrothendieckVector& v,
                           const DecompositionMatrix& d);

/// ⟨P, V⟩ for P_k × R_k (dual bases over a splitting field), and the
/// R_K-side pairing of coordinates against ordinary multiplicities.
BigInt pairing(const GrothendieckVector& pv, const GrothendieckVector& rv);

BlockPartition block_partition(const DecompositionMatrix& d);

/// Matches each simple of the quotient to the simple of the source that its
/// inflation along alpha is isomorphic to (by Brauer fingerprint).
std::vector<size_t> inflate_simples(const QuotientMap& alpha,
                                    const BrauerCharacterTable& bt_source,
                                    const BrauerCharacterTable& bt_target);

/// Maps each block of the quotient H to the unique block of G containing the
/// inflations of its simples; throws NotWellDefined if the inflations of one
/// H-block meet two G-blocks.
std::vector<int> block_pullback(const QuotientMap& alpha,
                                const BrauerCharacterTable& bt_g,
                                const BlockPartition& gb,
                                const BrauerCharacterTable& bt_h,
                                const BlockPartition& hb);

}  // namespace modrep
