#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "modrep/errors.hpp"

namespace modrep {

/// dim×dim integer matrix with entries reduced into [0, modulus).
struct ResidueMatrix {
  std::int64_t modulus = 1;
  int dim = 0;
  std::vector<std::int64_t> a;  // row-major

  ResidueMatrix() = default;
  ResidueMatrix(std::int64_t mod, int d)
      : modulus(mod), dim(d), a(static_cast<size_t>(d) * d, 0) {}
  static ResidueMatrix from_rows(std::int64_t mod,
                                 const std::vector<std::vector<std::int64_t>>& rows);
  static ResidueMatrix identity(std::int64_t mod, int d);

  std::int64_t& at(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }
  std::int64_t at(int i, int j) const {
    return a[static_cast<size_t>(i) * dim + j];
  }

  ResidueMatrix mul(const ResidueMatrix& other) const;
  /// Inverse mod the modulus; throws NotInvertible when det is not a unit.
  ResidueMatrix inverse() const;
  /// Exact determinant reduced mod modulus.
  std::int64_t det_mod() const;
  bool is_identity() const;
  /// Entrywise reduction to a divisor of the modulus.
  ResidueMatrix reduced(std::int64_t smaller_modulus) const;

  friend bool operator==(const ResidueMatrix& x, const ResidueMatrix& y) {
    return x.modulus == y.modulus && x.dim == y.dim && x.a == y.a;
  }
};

struct ConjugacyClassData {
  std::vector<int> class_of;                 // element index -> class index
  std::vector<int> reps;                     // class -> minimal element index
  std::vector<std::int64_t> sizes;           // class sizes
  std::vector<std::int64_t> centralizer_orders;
  std::vector<std::int64_t> element_orders;  // per class
  std::int64_t group_order = 0;
  std::int64_t exponent = 1;
  size_t count() const { return reps.size(); }
};

/// Finite matrix group over ℤ/pⁿ, fully enumerated in BFS order from the
/// identity (generators applied in the given order), so element indices are
/// stable across runs. elements()[0] is the identity.
class FiniteGroup {
 public:
  std::int64_t modulus() const { return modulus_; }
  int dim() const { return dim_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elems_.size()); }
  const std::vector<ResidueMatrix>& elements() const { return elems_; }
  const ResidueMatrix& element(int i) const { return elems_[static_cast<size_t>(i)]; }
  const std::vector<int>& generators() const { return gens_; }
  int identity() const { return 0; }

  /// Index of a matrix; -1 when not in the group.
  int index_of(const ResidueMatrix& m) const;
  int mul(int i, int j) const;
  int inv(int i) const { return inv_[static_cast<size_t>(i)]; }
  int conj(int g, int x) const;  // g x g^{-1}
  int power(int i, std::int64_t n) const;
  std::int64_t order_of(int i) const;

  /// Generator word for an element along the BFS tree (indices into
  /// generators(), identity = empty word).
  std::vector<int> word_of(int i) const;

  /// Conjugacy data, computed on first use and cached (construction is
  /// deterministic; the cache does not change observable state).
  const ConjugacyClassData& classes() const;

 private:
  friend FiniteGroup generate_group(const std::vector<ResidueMatrix>&,
                                    std::int64_t);
  std::int64_t modulus_ = 1;
  int dim_ = 0;
  std::vector<ResidueMatrix> elems_;
  std::vector<int> gens_;
  std::vector<int> inv_;
  std::vector<int> bfs_parent_, bfs_gen_;
  std::unordered_map<std::uint64_t, int> packed_index_;
  std::unordered_map<std::string, int> string_index_;
  bool packable_ = false;
  std::uint64_t pack(const ResidueMatrix& m) const;

  struct ClassesBox {
    std::once_flag once;
    std::unique_ptr<ConjugacyClassData> data;
  };
  mutable std::unique_ptr<ClassesBox> classes_box_ =
      std::make_unique<ClassesBox>();
};

/// Breadth-first closure of the generators. Throws CapExceeded when the
/// closure grows past cap and NotInvertible when a generator is singular.
FiniteGroup generate_group(const std::vector<ResidueMatrix>& gens,
                           std::int64_t cap = 1000000);

/// The full SL₂(ℤ/pⁿ) from the standard generators, with the order checked
/// against p^{3(n-1)} · p(p²-1).
FiniteGroup sl2_over(std::int64_t p, int n, std::int64_t cap = 1000000);

ConjugacyClassData conjugacy_classes(const FiniteGroup& g);

/// Class of the k-th power of the class representative.
int power_class(const FiniteGroup& g, const ConjugacyClassData& c, int cls,
                std::int64_t k);

/// Classes whose element order is coprime to p, ascending.
std::vector<int> p_regular_classes(const ConjugacyClassData& c, std::int64_t p);

/// Surjective homomorphism with enumerated kernel. The element table maps
/// source indices to target indices.
struct QuotientMap {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<int> image;
  std::vector<int> kernel;  // ascending element indices
};

/// Entrywise reduction map; target modulus must divide the source modulus.
QuotientMap reduction_map(const FiniteGroup& source, const FiniteGroup& target);

/// Quotient map given by generator images, extended along the BFS tree and
/// verified to be a surjective homomorphism.
QuotientMap hom_quotient_map(const FiniteGroup& source,
                             const FiniteGroup& target,
                             const std::vector<int>& gen_images);

}  // namespace modrep
