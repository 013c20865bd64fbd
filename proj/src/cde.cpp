#include "modrep/cde.hpp"

#include <algorithm>
#include <numeric>

namespace modrep {

DecompositionMatrix decomposition_matrix(const CharacterTable& ct,
                                         const BrauerCharacterTable& bt) {
  if (ct.group != bt.group) throw GroupMismatch("tables of different groups");
  if (bt.rows.size() != bt.p_regular.size())
    throw InvariantViolation("Brauer table is not square");

  const ConjugacyClassData& ccd = ct.group->classes();
  const size_t n_ord = ct.rows.size();
  const size_t n_sim = bt.rows.size();
  IntMatrix d(n_ord, n_sim);
  for (size_t i = 0; i < n_ord; ++i) {
    ClassFunction restricted = restrict_to_p_regular(ct.rows[i], ccd, bt.p);
    std::vector<Rational> coeffs = decompose(restricted, bt.rows);
    for (size_t j = 0; j < n_sim; ++j) {
      const Rational& c = coeffs[j];
      if (!is_integer(c))
        throw NonIntegralEntry("decomposition number " + rational_to_string(c));
      if (c < 0)
        throw NegativeEntry("decomposition number " + rational_to_string(c));
      d.at(i, j) = numerator(c);
    }
  }

  for (size_t i = 0; i < n_ord; ++i) {
    bool nonzero = false;
    for (size_t j = 0; j < n_sim; ++j) nonzero |= d.at(i, j) != 0;
    if (!nonzero) throw InvariantViolation("zero row in D");
  }
  for (size_t j = 0; j < n_sim; ++j) {
    bool nonzero = false;
    for (size_t i = 0; i < n_ord; ++i) nonzero |= d.at(i, j) != 0;
    if (!nonzero) throw InvariantViolation("zero column in D");
  }
  if (rref(d.to_rational()).rank != n_sim)
    throw InvariantViolation("D does not have full column rank");
  return DecompositionMatrix{std::move(d)};
}

CartanMatrix cartan_matrix(const DecompositionMatrix& d, std::int64_t p) {
  IntMatrix c = d.d.transposed() * d.d;
  const size_t n = c.rows;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (c.at(i, j) != c.at(j, i))
        throw InvariantViolation("Cartan matrix is not symmetric");
  // positive definiteness via leading principal minors
  for (size_t k = 1; k <= n; ++k) {
    IntMatrix minor(k, k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) minor.at(i, j) = c.at(i, j);
    if (int_det(minor) <= 0)
      throw InvariantViolation("Cartan matrix is not positive definite");
  }
  if (n > 0 && !is_p_power(int_det(c), BigInt(p)))
    throw InvariantViolation("Cartan determinant is not a p-power");
  return CartanMatrix{std::move(c)};
}

GrothendieckVector apply_d(const GrothendieckVector& v,
                           const DecompositionMatrix& d) {
  if (v.tag != BasisTag::OrdinaryIrreducibles)
    throw TagMismatch("d expects an R_K vector");
  if (v.coords.size() != d.d.rows) throw DimensionMismatch("apply_d");
  GrothendieckVector out{BasisTag::Simples,
                         std::vector<BigInt>(d.d.cols, BigInt(0))};
  for (size_t j = 0; j < d.d.cols; ++j)
    for (size_t i = 0; i < d.d.rows; ++i)
      out.coords[j] += d.d.at(i, j) * v.coords[i];
  return out;
}

GrothendieckVector apply_e(const GrothendieckVector& v,
                           const DecompositionMatrix& d) {
  if (v.tag != BasisTag::ProjectiveIndecomposables)
    throw TagMismatch("e expects a P_k vector");
  if (v.coords.size() != d.d.cols) throw DimensionMismatch("apply_e");
  GrothendieckVector out{BasisTag::OrdinaryIrreducibles,
                         std::vector<BigInt>(d.d.rows, BigInt(0))};
  for (size_t i = 0; i < d.d.rows; ++i)
    for (size_t j = 0; j < d.d.cols; ++j)
      out.coords[i] += d.d.at(i, j) * v.coords[j];
  return out;
}

BigInt pairing(const GrothendieckVector& pv, const GrothendieckVector& rv) {
  const bool pk_rk = pv.tag == BasisTag::ProjectiveIndecomposables &&
                     rv.tag == BasisTag::Simples;
  const bool rk_rk = pv.tag == BasisTag::OrdinaryIrreducibles &&
                     rv.tag == BasisTag::OrdinaryIrreducibles;
  if (!pk_rk && !rk_rk)
    throw TagMismatch("pairing expects (P_k, R_k) or (R_K, R_K)");
  if (pv.coords.size() != rv.coords.size()) throw DimensionMismatch("pairing");
  BigInt acc(0);
  for (size_t i = 0; i < pv.coords.size(); ++i)
    acc += pv.coords[i] * rv.coords[i];
  return acc;
}

BlockPartition block_partition(const DecompositionMatrix& d) {
  const size_t n_ord = d.d.rows, n_sim = d.d.cols;
  // union-find over ordinaries (0..n_ord) then simples (n_ord..)
  std::vector<int> parent(n_ord + n_sim);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (size_t i = 0; i < n_ord; ++i)
    for (size_t j = 0; j < n_sim; ++j)
      if (d.d.at(i, j) != 0) {
        int a = find(static_cast<int>(i));
        int b = find(static_cast<int>(n_ord + j));
        if (a != b) parent[static_cast<size_t>(a)] = b;
      }

  BlockPartition bp;
  bp.ordinary_block.assign(n_ord, -1);
  bp.simple_block.assign(n_sim, -1);
  std::vector<int> block_of_root(n_ord + n_sim, -1);
  // number blocks by first appearance in simple order, then leftover
  // ordinaries (isolated ordinaries cannot occur for a valid D)
  for (size_t j = 0; j < n_sim; ++j) {
    int root = find(static_cast<int>(n_ord + j));
    if (block_of_root[static_cast<size_t>(root)] < 0)
      block_of_root[static_cast<size_t>(root)] = bp.block_count++;
    bp.simple_block[j] = block_of_root[static_cast<size_t>(root)];
  }
  for (size_t i = 0; i < n_ord; ++i) {
    int root = find(static_cast<int>(i));
    if (block_of_root[static_cast<size_t>(root)] < 0)
      block_of_root[static_cast<size_t>(root)] = bp.block_count++;
    bp.ordinary_block[i] = block_of_root[static_cast<size_t>(root)];
  }
  return bp;
}

std::vector<size_t> inflate_simples(const QuotientMap& alpha,
                                    const BrauerCharacterTable& bt_source,
                                    const BrauerCharacterTable& bt_target) {
  // fingerprint of the inflation of target-simple S: dimension plus the
  // target Brauer values read along the class map
  const FiniteGroup& src = *alpha.source;
  const FiniteGroup& tgt = *alpha.target;
  if (bt_source.group != &src || bt_target.group != &tgt)
    throw GroupMismatch("tables do not match the quotient map");
  const ConjugacyClassData& sccd = src.classes();
  const ConjugacyClassData& tccd = tgt.classes();

  std::vector<size_t> match;
  for (size_t s = 0; s < bt_target.rows.size(); ++s) {
    std::vector<Cyclotomic> inflated;
    for (int c : bt_source.p_regular) {
      int img_class = tccd.class_of[static_cast<size_t>(
          alpha.image[static_cast<size_t>(sccd.reps[static_cast<size_t>(c)])])];
      auto it = std::find(bt_target.p_regular.begin(),
                          bt_target.p_regular.end(), img_class);
      if (it == bt_target.p_regular.end())
        throw InvariantViolation("image of a p-regular class is p-singular");
      inflated.push_back(
          bt_target.rows[s]
              .values[static_cast<size_t>(it - bt_target.p_regular.begin())]);
    }
    int found = -1;
    for (size_t i = 0; i < bt_source.rows.size(); ++i) {
      if (bt_source.dims[i] != bt_target.dims[s]) continue;
      bool equal = true;
      for (size_t k = 0; k < inflated.size() && equal; ++k)
        equal = bt_source.rows[i].values[k] == inflated[k];
      if (equal) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found < 0)
      throw NotWellDefined("inflated simple not found in the source table");
    match.push_back(static_cast<size_t>(found));
  }
  return match;
}

std::vector<int> block_pullback(const QuotientMap& alpha,
                                const BrauerCharacterTable& bt_g,
                                const BlockPartition& gb,
                                const BrauerCharacterTable& bt_h,
                                const BlockPartition& hb) {
  std::vector<size_t> inflation = inflate_simples(alpha, bt_g, bt_h);
  std::vector<int> out(static_cast<size_t>(hb.block_count), -1);
  for (size_t s = 0; s < inflation.size(); ++s) {
    int hblock = hb.simple_block[s];
    int gblock = gb.simple_block[inflation[s]];
    if (out[static_cast<size_t>(hblock)] < 0)
      out[static_cast<size_t>(hblock)] = gblock;
    else if (out[static_cast<size_t>(hblock)] != gblock)
      throw NotWellDefined("one quotient block meets two source blocks");
  }
  for (int b : out)
    if (b < 0) throw NotWellDefined("quotient block with no simples");
  return out;
}

}  // namespace modrep
