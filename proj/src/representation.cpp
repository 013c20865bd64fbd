#include "modrep/representation.hpp"

#include <algorithm>

namespace modrep {

Matrix<FFElem> Representation::matrix_of(int element) const {
  Matrix<FFElem> m = Matrix<FFElem>::identity(dim, zero());
  for (int gi : group->word_of(element)) m = m * action[static_cast<size_t>(gi)];
  return m;
}

void validate_representation(const Representation& r, std::uint64_t seed,
                             int samples) {
  for (const auto& m : r.action) {
    if (m.rows() != r.dim || m.cols() != r.dim)
      throw NotAnAction("action matrix has wrong shape");
    if (r.dim > 0 && rref(m).rank != r.dim)
      throw NotAnAction("action matrix is singular");
  }
  std::mt19937_64 rng(seed);
  const std::int64_t n = r.group->order();
  for (int s = 0; s < samples; ++s) {
    int x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int y = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (!(r.matrix_of(x) * r.matrix_of(y) == r.matrix_of(r.group->mul(x, y))))
      throw NotAnAction("action does not extend multiplicatively");
  }
}

Representation trivial_rep(const FiniteGroup& g, const FiniteField& field) {
  Representation r;
  r.group = &g;
  r.field = &field;
  r.dim = 1;
  for (size_t i = 0; i < g.generators().size(); ++i)
    r.action.push_back(Matrix<FFElem>::identity(1, FFElem(field, 0)));
  return r;
}

Representation perm_module(const FiniteGroup& g,
                           const std::vector<std::vector<int>>& perms,
                           const FiniteField& field) {
  if (perms.size() != g.generators().size())
    throw NotAnAction("one permutation per generator required");
  const size_t n = perms.empty() ? 0 : perms[0].size();
  Representation r;
  r.group = &g;
  r.field = &field;
  r.dim = n;
  for (const auto& perm : perms) {
    if (perm.size() != n) throw NotAnAction("permutation size mismatch");
    std::vector<bool> seen(n, false);
    Matrix<FFElem> m(n, n, FFElem(field, 0));
    for (size_t x = 0; x < n; ++x) {
      int y = perm[x];
      if (y < 0 || static_cast<size_t>(y) >= n || seen[static_cast<size_t>(y)])
        throw NotAnAction("not a permutation");
      seen[static_cast<size_t>(y)] = true;
      m.at(x, static_cast<size_t>(y)) = r.one();
    }
    r.action.push_back(std::move(m));
  }
  validate_representation(r);
  return r;
}

Representation regular_module(const FiniteGroup& g, const FiniteField& field) {
  std::vector<std::vector<int>> perms;
  for (int gi : g.generators()) {
    std::vector<int> perm(static_cast<size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) perm[static_cast<size_t>(x)] = g.mul(x, gi);
    perms.push_back(std::move(perm));
  }
  return perm_module(g, perms, field);
}

Representation conjugation_perm_module(const FiniteGroup& g,
                                       const std::vector<int>& subgroup,
                                       const FiniteField& field) {
  std::vector<int> pos(static_cast<size_t>(g.order()), -1);
  for (size_t i = 0; i < subgroup.size(); ++i)
    pos[static_cast<size_t>(subgroup[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> perms;
  for (int gi : g.generators()) {
    std::vector<int> perm(subgroup.size());
    for (size_t i = 0; i < subgroup.size(); ++i) {
      int img = g.conj(gi, subgroup[i]);
      int j = pos[static_cast<size_t>(img)];
      if (j < 0) throw NotAnAction("subgroup not closed under conjugation");
      perm[i] = j;
    }
    perms.push_back(std::move(perm));
  }
  return perm_module(g, perms, field);
}

Representation natural_module(const FiniteGroup& g, const FiniteField& field) {
  const std::int64_t p = field.characteristic();
  if (g.modulus() % p != 0)
    throw FieldMismatch("group modulus is not a power of the characteristic");
  std::int64_t m = g.modulus();
  while (m % p == 0) m /= p;
  if (m != 1)
    throw FieldMismatch("group modulus is not a power of the characteristic");
  Representation r;
  r.group = &g;
  r.field = &field;
  r.dim = static_cast<size_t>(g.dim());
  for (int gi : g.generators()) {
    const ResidueMatrix& src = g.element(gi);
    Matrix<FFElem> mat(r.dim, r.dim, FFElem(field, 0));
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j)
        mat.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
            ff(field, src.at(i, j));
    r.action.push_back(std::move(mat));
  }
  validate_representation(r);
  return r;
}

Representation tensor(const Representation& a, const Representation& b) {
  if (a.group != b.group) throw GroupMismatch("tensor of different groups");
  if (a.field != b.field) throw FieldMismatch("tensor of different fields");
  Representation r;
  r.group = a.group;
  r.field = a.field;
  r.dim = a.dim * b.dim;
  for (size_t gi = 0; gi < a.action.size(); ++gi) {
    const auto& ma = a.action[gi];
    const auto& mb = b.action[gi];
    Matrix<FFElem> m(r.dim, r.dim, a.zero());
    for (size_t i1 = 0; i1 < a.dim; ++i1)
      for (size_t j1 = 0; j1 < a.dim; ++j1) {
        const FFElem& v = ma.at(i1, j1);
        if (v.is_zero()) continue;
        for (size_t i2 = 0; i2 < b.dim; ++i2)
          for (size_t j2 = 0; j2 < b.dim; ++j2)
            m.at(i1 * b.dim + i2, j1 * b.dim + j2) = v * mb.at(i2, j2);
      }
    r.action.push_back(std::move(m));
  }
  return r;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.group != b.group) throw GroupMismatch("sum of different groups");
  if (a.field != b.field) throw FieldMismatch("sum of different fields");
  Representation r;
  r.group = a.group;
  r.field = a.field;
  r.dim = a.dim + b.dim;
  for (size_t gi = 0; gi < a.action.size(); ++gi) {
    Matrix<FFElem> m(r.dim, r.dim, a.zero());
    for (size_t i = 0; i < a.dim; ++i)
      for (size_t j = 0; j < a.dim; ++j) m.at(i, j) = a.action[gi].at(i, j);
    for (size_t i = 0; i < b.dim; ++i)
      for (size_t j = 0; j < b.dim; ++j)
        m.at(a.dim + i, a.dim + j) = b.action[gi].at(i, j);
    r.action.push_back(std::move(m));
  }
  return r;
}

size_t hom_dim(const Representation& a, const Representation& b) {
  if (a.group != b.group) throw GroupMismatch("hom of different groups");
  if (a.field != b.field) throw FieldMismatch("hom of different fields");
  const size_t na = a.dim, nb = b.dim;
  if (na == 0 || nb == 0) return 0;
  // unknowns: T laid out row-major, na*nb of them
  Matrix<FFElem> sys(a.action.size() * na * nb, na * nb, a.zero());
  size_t row = 0;
  for (size_t gi = 0; gi < a.action.size(); ++gi) {
    const auto& ma = a.action[gi];
    const auto& mb = b.action[gi];
    for (size_t i = 0; i < na; ++i)
      for (size_t j = 0; j < nb; ++j) {
        // (A T)_{ij} - (T B)_{ij} = 0
        for (size_t k = 0; k < na; ++k)
          sys.at(row, k * nb + j) += ma.at(i, k);
        for (size_t k = 0; k < nb; ++k)
          sys.at(row, i * nb + k) -= mb.at(k, j);
        ++row;
      }
  }
  return nullity(sys);
}

}  // namespace modrep
