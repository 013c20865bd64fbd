#include "modrep/tower.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace modrep {

namespace {

void verify_tower(const TowerDescriptor& t) {
  if (t.levels.empty()) throw Error("tower needs at least one level");
  if (t.maps.size() + 1 != t.levels.size())
    throw DimensionMismatch("tower needs one map per consecutive pair");
  for (size_t i = 0; i < t.maps.size(); ++i) {
    const QuotientMap& q = t.maps[i];
    if (q.source != t.levels[i + 1].get() || q.target != t.levels[i].get())
      throw TargetMismatch("tower map endpoints out of order");
    BigInt ksize(static_cast<std::int64_t>(q.kernel.size()));
    if (!is_p_power(ksize, BigInt(t.p)))
      throw NonPGroupKernel("section " + std::to_string(i) + " has order " +
                            ksize.str());
    for (int k : q.kernel) {
      std::int64_t ord = t.levels[i + 1]->order_of(k);
      if (!is_p_power(BigInt(ord), BigInt(t.p)) && ord != 1)
        throw NonPGroupKernel("kernel element of non-p-power order");
    }
  }
}

}  // namespace

TowerDescriptor build_sl2_tower(std::int64_t p, int depth, std::int64_t cap) {
  if (depth < 1) throw Error("tower depth must be at least 1");
  TowerDescriptor t;
  t.family = "sl2";
  t.p = p;
  for (int n = 1; n <= depth; ++n)
    t.levels.push_back(std::make_shared<FiniteGroup>(sl2_over(p, n, cap)));
  for (int i = 0; i + 1 < depth; ++i)
    t.maps.push_back(reduction_map(*t.levels[static_cast<size_t>(i) + 1],
                                   *t.levels[static_cast<size_t>(i)]));
  verify_tower(t);
  return t;
}

TowerDescriptor custom_tower(std::int64_t p,
                             std::vector<std::shared_ptr<FiniteGroup>> levels,
                             std::vector<QuotientMap> maps) {
  TowerDescriptor t;
  t.family = "custom";
  t.p = p;
  t.levels = std::move(levels);
  t.maps = std::move(maps);
  verify_tower(t);
  return t;
}

ClassFunction section_brauer_character(const TowerDescriptor& t, size_t i,
                                       const std::vector<int>& classes) {
  if (i + 1 >= t.levels.size()) throw DimensionMismatch("no such section");
  const FiniteGroup& g = *t.levels[i + 1];
  const ConjugacyClassData& ccd = g.classes();
  const std::vector<int>& section = t.section(i);
  std::set<int> in_section(section.begin(), section.end());

  std::vector<Cyclotomic> values;
  for (int c : classes) {
    int rep = ccd.reps[static_cast<size_t>(c)];
    std::int64_t fixed = 0;
    for (int u : section)
      if (g.conj(rep, u) == u) ++fixed;
    values.push_back(Cyclotomic(Rational(fixed)));
  }
  return ClassFunction(classes, std::move(values));
}

IntMatrix b_matrix(const TowerDescriptor& t, size_t i,
                   const BrauerCharacterTable& bt) {
  if (i + 1 >= t.levels.size()) throw DimensionMismatch("no such section");
  if (bt.group != t.levels[i + 1].get())
    throw GroupMismatch("Brauer table is not for level i+1");
  if (bt.rows.size() != bt.p_regular.size())
    throw InvariantViolation("Brauer table is not square");

  const size_t n = bt.rows.size();
  ClassFunction xchar = section_brauer_character(t, i, bt.p_regular);
  IntMatrix b(n, n);
  for (size_t col = 0; col < n; ++col) {
    ClassFunction prod = xchar * bt.rows[col];
    std::vector<Rational> coeffs = decompose(prod, bt.rows);
    for (size_t row = 0; row < n; ++row) {
      const Rational& c = coeffs[row];
      if (!is_integer(c) || c < 0)
        throw NonIntegralEntry("B entry " + rational_to_string(c));
      b.at(row, col) = numerator(c);
    }
  }

  // dimension count: sum_S dim(S) B_{S,T} = |section| dim(T)
  const std::int64_t section_order =
      static_cast<std::int64_t>(t.section(i).size());
  for (size_t col = 0; col < n; ++col) {
    BigInt acc(0);
    for (size_t row = 0; row < n; ++row) acc += bt.dims[row] * b.at(row, col);
    if (acc != BigInt(section_order) * bt.dims[col])
      throw InvariantViolation("B column fails the dimension count");
  }
  return b;
}

UniformWitness verify_uniform(const TowerDescriptor& t, size_t i) {
  if (i + 2 >= t.levels.size())
    throw DimensionMismatch("need level i+2 to compare sections");
  const FiniteGroup& big = *t.levels[i + 2];
  const QuotientMap& to_mid = t.maps[i + 1];  // big -> level i+1
  const QuotientMap& mid_down = t.maps[i];    // level i+1 -> level i

  // kernel of the composite big -> level i, and of big -> level i+1
  std::vector<int> upper, lower = to_mid.kernel;
  for (int x = 0; x < big.order(); ++x)
    if (mid_down.image[static_cast<size_t>(
            to_mid.image[static_cast<size_t>(x)])] ==
        t.levels[i]->identity())
      upper.push_back(x);
  std::set<int> lower_set(lower.begin(), lower.end());

  // cosets of the lower kernel inside the upper one, canonical representative
  // = minimal element index
  std::map<int, int> coset_of;  // element -> coset id
  std::vector<int> coset_rep;
  for (int u : upper) {
    if (coset_of.count(u)) continue;
    int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(u);
    for (int v : lower) coset_of[big.mul(u, v)] = id;
  }
  if (coset_rep.size() != lower.size())
    throw NotUniform("sections have different orders");

  // p-power map: well-defined on cosets, lands in the lower kernel, bijects
  std::vector<int> image_of_coset(coset_rep.size(), -1);
  for (size_t c = 0; c < coset_rep.size(); ++c) {
    int expected = big.power(coset_rep[c], t.p);
    if (!lower_set.count(expected))
      throw NotUniform("p-th power leaves the smaller section");
    image_of_coset[c] = expected;
  }
  for (int u : upper) {
    int c = coset_of.at(u);
    if (big.power(u, t.p) != image_of_coset[static_cast<size_t>(c)])
      throw NotUniform("p-th power is not constant on a coset");
  }
  std::set<int> images(image_of_coset.begin(), image_of_coset.end());
  if (images.size() != lower.size())
    throw NotUniform("p-power map is not a bijection");

  // conjugation equivariance over the generators
  for (int gi : big.generators()) {
    for (size_t c = 0; c < coset_rep.size(); ++c) {
      int conj_elem = big.conj(gi, coset_rep[c]);
      auto it = coset_of.find(conj_elem);
      if (it == coset_of.end())
        throw NotUniform("conjugation does not preserve the section");
      int lhs = image_of_coset[static_cast<size_t>(it->second)];
      int rhs = big.conj(gi, image_of_coset[c]);
      if (lhs != rhs) throw NotUniform("p-power map is not equivariant");
    }
  }

  UniformWitness w;
  for (size_t c = 0; c < coset_rep.size(); ++c)
    w.bijection.emplace_back(coset_rep[c], image_of_coset[c]);
  return w;
}

IntMatrix tower_cartan(const IntMatrix& c1, const IntMatrix& b, int n) {
  if (n < 1) throw DimensionMismatch("level index must be positive");
  if (!c1.is_square() || !b.is_square() || c1.rows != b.rows)
    throw DimensionMismatch("incompatible Cartan and B shapes");
  return int_matpow(b, static_cast<std::uint64_t>(n - 1)) * c1;
}

ClosedFormResult sl2_closed_form(int n) {
  if (n < 1) throw DimensionMismatch("level index must be positive");
  auto pw = [](std::int64_t k) {
    return int_pow(BigInt(3), static_cast<std::uint64_t>(k));
  };
  BigInt big = pw(3 * n - 2);
  BigInt entries[4] = {
      big + pw(n + 1),  // (1,1) numerator
      big - pw(n),      // (1,2) and (2,1) numerator
      big + pw(n - 1),  // (2,2) numerator
      big,              // (3,3), no division
  };
  for (int k = 0; k < 3; ++k)
    if (entries[k] % 4 != 0)
      throw NonIntegralEntry("closed-form numerator not divisible by 4");
  IntMatrix c(3, 3);
  c.at(0, 0) = entries[0] / 4;
  c.at(0, 1) = entries[1] / 4;
  c.at(1, 0) = entries[1] / 4;
  c.at(1, 1) = entries[2] / 4;
  c.at(2, 2) = entries[3];
  ClosedFormResult out{std::move(c), pw(7 * n - 5)};
  return out;
}

}  // namespace modrep
