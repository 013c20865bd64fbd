#include "modrep/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>

#include "modrep/int_matrix.hpp"
#include "modrep/rational.hpp"

namespace modrep {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}


}  // namespace

ResidueMatrix ResidueMatrix::from_rows(
    std::int64_t mod, const std::vector<std::vector<std::int64_t>>& rows) {
  if (mod < 2) throw Error("modulus must be at least 2");
  ResidueMatrix m(mod, static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != m.dim)
      throw DimensionMismatch("matrix rows must be square");
    for (int j = 0; j < m.dim; ++j)
      m.at(i, j) = mod_reduce(rows[static_cast<size_t>(i)][static_cast<size_t>(j)], mod);
  }
  return m;
}

ResidueMatrix ResidueMatrix::identity(std::int64_t mod, int d) {
  ResidueMatrix m(mod, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1 % mod;
  return m;
}

ResidueMatrix ResidueMatrix::mul(const ResidueMatrix& other) const {
  if (modulus != other.modulus || dim != other.dim)
    throw DimensionMismatch("residue matrix product");
  ResidueMatrix out(modulus, dim);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      std::int64_t v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < dim; ++j)
        out.at(i, j) = (out.at(i, j) + v * other.at(k, j)) % modulus;
    }
  return out;
}

std::int64_t ResidueMatrix::det_mod() const {
  IntMatrix m(static_cast<size_t>(dim), static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(static_cast<size_t>(i), static_cast<size_t>(j)) = at(i, j);
  BigInt d = int_det(m) % modulus;
  if (d < 0) d += modulus;
  return static_cast<std::int64_t>(d);
}

ResidueMatrix ResidueMatrix::inverse() const {
  // Gauss-Jordan over ℤ/m; for an invertible matrix over this local ring a
  // unit pivot exists in every column.
  ResidueMatrix w = *this;
  ResidueMatrix inv = identity(modulus, dim);
  for (int col = 0; col < dim; ++col) {
    int piv = -1;
    for (int i = col; i < dim && piv < 0; ++i)
      if (std::gcd(w.at(i, col), modulus) == 1) piv = i;
    if (piv < 0) throw NotInvertible("no unit pivot mod " + std::to_string(modulus));
    if (piv != col)
      for (int j = 0; j < dim; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    // scale pivot row by the modular inverse of the pivot
    std::int64_t p = w.at(col, col);
    std::int64_t t0 = 0, t1 = 1, r0 = modulus, r1 = p;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
      tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
    }
    std::int64_t pinv = mod_reduce(t0, modulus);
    for (int j = 0; j < dim; ++j) {
      w.at(col, j) = w.at(col, j) * pinv % modulus;
      inv.at(col, j) = inv.at(col, j) * pinv % modulus;
    }
    for (int i = 0; i < dim; ++i) {
      if (i == col || w.at(i, col) == 0) continue;
      std::int64_t f = w.at(i, col);
      for (int j = 0; j < dim; ++j) {
        w.at(i, j) = mod_reduce(w.at(i, j) - f * w.at(col, j), modulus);
        inv.at(i, j) = mod_reduce(inv.at(i, j) - f * inv.at(col, j), modulus);
      }
    }
  }
  if (!w.is_identity()) throw NotInvertible("matrix is singular");
  return inv;
}

bool ResidueMatrix::is_identity() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (at(i, j) != (i == j ? 1 % modulus : 0)) return false;
  return true;
}

ResidueMatrix ResidueMatrix::reduced(std::int64_t smaller_modulus) const {
  if (modulus % smaller_modulus != 0)
    throw TargetMismatch("reduction modulus must divide");
  ResidueMatrix out(smaller_modulus, dim);
  for (size_t i = 0; i < a.size(); ++i) out.a[i] = a[i] % smaller_modulus;
  return out;
}

std::uint64_t FiniteGroup::pack(const ResidueMatrix& m) const {
  std::uint64_t key = 0;
  for (auto v : m.a) key = key * static_cast<std::uint64_t>(modulus_) + static_cast<std::uint64_t>(v);
  return key;
}

int FiniteGroup::index_of(const ResidueMatrix& m) const {
  if (packable_) {
    auto it = packed_index_.find(pack(m));
    return it == packed_index_.end() ? -1 : it->second;
  }
  std::ostringstream os;
  for (auto v : m.a) os << v << ',';
  auto it = string_index_.find(os.str());
  return it == string_index_.end() ? -1 : it->second;
}

int FiniteGroup::mul(int i, int j) const {
  int k = index_of(elems_[static_cast<size_t>(i)].mul(elems_[static_cast<size_t>(j)]));
  if (k < 0) throw Error("group not closed under product");  // cannot happen
  return k;
}

int FiniteGroup::conj(int g, int x) const {
  return mul(mul(g, x), inv_[static_cast<size_t>(g)]);
}

int FiniteGroup::power(int i, std::int64_t n) const {
  if (n < 0) {
    i = inv_[static_cast<size_t>(i)];
    n = -n;
  }
  int acc = identity();
  int base = i;
  while (n != 0) {
    if (n & 1) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1;
  }
  return acc;
}

std::int64_t FiniteGroup::order_of(int i) const {
  std::int64_t ord = 1;
  int x = i;
  while (x != identity()) {
    x = mul(x, i);
    ++ord;
  }
  return ord;
}

std::vector<int> FiniteGroup::word_of(int i) const {
  std::vector<int> w;
  while (i != identity()) {
    w.push_back(bfs_gen_[static_cast<size_t>(i)]);
    i = bfs_parent_[static_cast<size_t>(i)];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

const ConjugacyClassData& FiniteGroup::classes() const {
  std::call_once(classes_box_->once, [this] {
    classes_box_->data =
        std::make_unique<ConjugacyClassData>(conjugacy_classes(*this));
  });
  return *classes_box_->data;
}

FiniteGroup generate_group(const std::vector<ResidueMatrix>& gens,
                           std::int64_t cap) {
  if (gens.empty()) throw Error("at least one generator required");
  const std::int64_t mod = gens[0].modulus;
  const int dim = gens[0].dim;
  FiniteGroup g;
  g.modulus_ = mod;
  g.dim_ = dim;

  // pack entries into a 64-bit key when mod^(dim^2) fits
  double bits = dim * dim * std::log2(static_cast<double>(mod));
  g.packable_ = bits < 62.0;

  for (const auto& m : gens) {
    if (m.modulus != mod || m.dim != dim)
      throw DimensionMismatch("generators must share modulus and size");
    if (std::gcd(m.det_mod(), mod) != 1)
      throw NotInvertible("generator determinant is not a unit");
  }

  auto insert = [&g](const ResidueMatrix& m) {
    int idx = static_cast<int>(g.elems_.size());
    if (g.packable_)
      g.packed_index_.emplace(g.pack(m), idx);
    else {
      std::ostringstream os;
      for (auto v : m.a) os << v << ',';
      g.string_index_.emplace(os.str(), idx);
    }
    g.elems_.push_back(m);
    return idx;
  };

  insert(ResidueMatrix::identity(mod, dim));
  g.bfs_parent_.push_back(0);
  g.bfs_gen_.push_back(-1);

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      ResidueMatrix next = g.elems_[static_cast<size_t>(cur)].mul(gens[gi]);
      if (g.index_of(next) >= 0) continue;
      if (static_cast<std::int64_t>(g.elems_.size()) >= cap)
        throw CapExceeded("group closure exceeds cap " + std::to_string(cap));
      int idx = insert(next);
      g.bfs_parent_.push_back(cur);
      g.bfs_gen_.push_back(static_cast<int>(gi));
      queue.push_back(idx);
    }
  }

  g.gens_.reserve(gens.size());
  for (const auto& m : gens) g.gens_.push_back(g.index_of(m));

  g.inv_.resize(g.elems_.size());
  for (size_t i = 0; i < g.elems_.size(); ++i) {
    int j = g.index_of(g.elems_[i].inverse());
    if (j < 0) throw Error("closure not inverse-closed");  // cannot happen
    g.inv_[i] = j;
  }
  return g;
}

FiniteGroup sl2_over(std::int64_t p, int n, std::int64_t cap) {
  std::int64_t mod = 1;
  for (int i = 0; i < n; ++i) mod *= p;
  std::vector<ResidueMatrix> gens = {
      ResidueMatrix::from_rows(mod, {{1, 1}, {0, 1}}),
      ResidueMatrix::from_rows(mod, {{0, mod - 1}, {1, 0}}),
  };
  FiniteGroup g = generate_group(gens, cap);
  BigInt expected = int_pow(BigInt(p), static_cast<std::uint64_t>(3 * (n - 1)));
  expected *= p * (p * p - 1);
  if (BigInt(g.order()) != expected)
    throw InvariantViolation("SL2 order mismatch: got " +
                             std::to_string(g.order()));
  return g;
}

ConjugacyClassData conjugacy_classes(const FiniteGroup& g) {
  const std::int64_t n = g.order();
  ConjugacyClassData c;
  c.group_order = n;
  c.class_of.assign(static_cast<size_t>(n), -1);
  for (int seed = 0; seed < n; ++seed) {
    if (c.class_of[static_cast<size_t>(seed)] >= 0) continue;
    int cls = static_cast<int>(c.reps.size());
    c.reps.push_back(seed);
    // orbit of the conjugation action, generated by the group generators
    std::deque<int> queue{seed};
    c.class_of[static_cast<size_t>(seed)] = cls;
    std::int64_t size = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      ++size;
      for (int gi : g.generators()) {
        int y = g.conj(gi, x);
        if (c.class_of[static_cast<size_t>(y)] < 0) {
          c.class_of[static_cast<size_t>(y)] = cls;
          queue.push_back(y);
        }
      }
    }
    c.sizes.push_back(size);
    c.centralizer_orders.push_back(n / size);
    std::int64_t ord = g.order_of(seed);
    c.element_orders.push_back(ord);
    c.exponent = std::lcm(c.exponent, ord);
  }
  return c;
}

int power_class(const FiniteGroup& g, const ConjugacyClassData& c, int cls,
                std::int64_t k) {
  int r = c.reps[static_cast<size_t>(cls)];
  return c.class_of[static_cast<size_t>(g.power(r, k))];
}

std::vector<int> p_regular_classes(const ConjugacyClassData& c, std::int64_t p) {
  std::vector<int> out;
  for (size_t i = 0; i < c.count(); ++i)
    if (c.element_orders[i] % p != 0) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

void verify_quotient(QuotientMap& q) {
  const FiniteGroup& src = *q.source;
  const FiniteGroup& tgt = *q.target;
  // homomorphism on (element, generator) pairs extends to all products
  for (int x = 0; x < src.order(); ++x)
    for (int gi : src.generators()) {
      int lhs = q.image[static_cast<size_t>(src.mul(x, gi))];
      int rhs = tgt.mul(q.image[static_cast<size_t>(x)], q.image[static_cast<size_t>(gi)]);
      if (lhs != rhs) throw NotAHomomorphism("image of product disagrees");
    }
  std::vector<bool> hit(static_cast<size_t>(tgt.order()), false);
  for (int v : q.image) hit[static_cast<size_t>(v)] = true;
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
    throw TargetMismatch("map is not surjective");
  for (int x = 0; x < src.order(); ++x)
    if (q.image[static_cast<size_t>(x)] == tgt.identity())
      q.kernel.push_back(x);
  if (static_cast<std::int64_t>(q.kernel.size()) * tgt.order() != src.order())
    throw InvariantViolation("kernel size inconsistent");
}

}  // namespace

QuotientMap reduction_map(const FiniteGroup& source, const FiniteGroup& target) {
  if (source.dim() != target.dim())
    throw TargetMismatch("dimension mismatch");
  if (source.modulus() % target.modulus() != 0)
    throw TargetMismatch("target modulus must divide source modulus");
  QuotientMap q;
  q.source = &source;
  q.target = &target;
  q.image.resize(static_cast<size_t>(source.order()));
  for (int x = 0; x < source.order(); ++x) {
    int y = target.index_of(source.element(x).reduced(target.modulus()));
    if (y < 0)
      throw TargetMismatch("reduced element not in target group");
    q.image[static_cast<size_t>(x)] = y;
  }
  verify_quotient(q);
  return q;
}

QuotientMap hom_quotient_map(const FiniteGroup& source,
                             const FiniteGroup& target,
                             const std::vector<int>& gen_images) {
  if (gen_images.size() != source.generators().size())
    throw TargetMismatch("one image per generator required");
  QuotientMap q;
  q.source = &source;
  q.target = &target;
  q.image.assign(static_cast<size_t>(source.order()), -1);
  q.image[0] = target.identity();
  // extend along the BFS tree: x = parent * gen
  for (int x = 1; x < source.order(); ++x) {
    std::vector<int> w = source.word_of(x);
    int img = target.identity();
    for (int gi : w) img = target.mul(img, gen_images[static_cast<size_t>(gi)]);
    q.image[static_cast<size_t>(x)] = img;
  }
  verify_quotient(q);
  return q;
}

}  // namespace modrep
