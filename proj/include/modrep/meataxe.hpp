#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modrep/representation.hpp"

namespace modrep {

struct ChopFactor {
  Representation simple;
  std::int64_t multiplicity = 0;
  std::string fingerprint;  // dimension + Brauer character values
};

struct ChopResult {
  std::vector<ChopFactor> factors;  // pairwise non-isomorphic, sorted
  std::int64_t dimension_weighted_count() const {
    std::int64_t total = 0;
    for (const auto& f : factors)
      total += f.multiplicity * static_cast<std::int64_t>(f.simple.dim);
    return total;
  }
};

struct ChopOptions {
  int max_word_length = 6;   // words in the generators per algebra element
  int terms = 3;             // summands per random algebra element
  int budget = 200;          // random elements tried per module
  std::size_t enum_cap = 2000;  // kernel vectors enumerated for certification
};

/// Complete multiset of composition factors of m, deterministic for a given
/// seed. Random algebra elements are short random generator words with
/// random nonzero coefficients; proper submodules are found by spinning
/// kernel vectors, and irreducibility is certified by Norton's criterion
/// applied to the kernel of the candidate and of its transpose. Throws
/// RetryBudgetExceeded when no conclusive element is found within the budget.
ChopResult chop(const Representation& m, std::uint64_t seed,
                const ChopOptions& options = {});

}  // namespace modrep
