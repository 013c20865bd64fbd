#include "modrep/meataxe.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "modrep/characters.hpp"

namespace modrep {

namespace {

using Row = std::vector<FFElem>;

// Row space kept in full reduced echelon form (pivot entries 1, pivot
// columns clear above and below), rows ordered by pivot column.
class RowBasis {
 public:
  RowBasis(const FiniteField& f, size_t ncols) : field_(&f), ncols_(ncols) {}

  size_t size() const { return rows_.size(); }
  size_t ncols() const { return ncols_; }
  const Row& row(size_t i) const { return rows_[i]; }
  size_t pivot(size_t i) const { return pivots_[i]; }

  void reduce(Row& v) const {
    for (size_t t = 0; t < rows_.size(); ++t) {
      const FFElem& c = v[pivots_[t]];
      if (c.is_zero()) continue;
      FFElem f = c;
      for (size_t j = 0; j < ncols_; ++j) v[j] -= f * rows_[t][j];
    }
  }

  bool add(Row v) {
    reduce(v);
    size_t p = 0;
    while (p < ncols_ && v[p].is_zero()) ++p;
    if (p == ncols_) return false;
    FFElem inv = FFElem(*field_, field_->one()) / v[p];
    for (size_t j = p; j < ncols_; ++j) v[j] *= inv;
    for (size_t t = 0; t < rows_.size(); ++t) {
      const FFElem& c = rows_[t][p];
      if (c.is_zero()) continue;
      FFElem f = c;
      for (size_t j = 0; j < ncols_; ++j) rows_[t][j] -= f * v[j];
    }
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
    return true;
  }

 private:
  const FiniteField* field_;
  size_t ncols_;
  std::vector<Row> rows_;
  std::vector<size_t> pivots_;
};

Row mat_row_mul(const Row& v, const Matrix<FFElem>& m) {
  Row out(m.cols(), v.empty() ? FFElem() : FFElem(*v[0].field(), 0));
  for (size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

// Smallest invariant subspace containing the seed, for the given action
// matrices.
RowBasis spin(const Row& seed, const std::vector<Matrix<FFElem>>& action,
              const FiniteField& field) {
  RowBasis basis(field, seed.size());
  basis.add(seed);
  std::vector<Row> queue{seed};
  while (!queue.empty()) {
    Row v = std::move(queue.back());
    queue.pop_back();
    for (const auto& m : action) {
      Row w = mat_row_mul(v, m);
      Row w_copy = w;
      if (basis.add(std::move(w_copy))) queue.push_back(std::move(w));
      if (basis.size() == basis.ncols()) return basis;
    }
  }
  return basis;
}

// Left kernel of theta ({v : v·theta = 0}) as reduced row basis.
RowBasis left_kernel(const Matrix<FFElem>& theta, const FiniteField& field) {
  auto cols = kernel_basis(theta.transposed());
  RowBasis basis(field, theta.rows());
  for (auto& v : cols) basis.add(std::move(v));
  return basis;
}

Matrix<FFElem> random_algebra_element(const Representation& r,
                                      std::mt19937_64& rng,
                                      const ChopOptions& opt) {
  const FiniteField& f = *r.field;
  Matrix<FFElem> out(r.dim, r.dim, r.zero());
  for (int t = 0; t < opt.terms; ++t) {
    int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                             opt.max_word_length));
    Matrix<FFElem> word = Matrix<FFElem>::identity(r.dim, r.zero());
    for (int i = 0; i < len; ++i)
      word = word * r.action[static_cast<size_t>(rng() % r.action.size())];
    FFElem coeff(f, static_cast<std::int32_t>(1 + rng() % static_cast<std::uint64_t>(
                                                      f.order() - 1)));
    for (size_t i = 0; i < r.dim; ++i)
      for (size_t j = 0; j < r.dim; ++j) out.at(i, j) += coeff * word.at(i, j);
  }
  return out;
}

Representation sub_rep(const Representation& r, const RowBasis& w) {
  Representation s;
  s.group = r.group;
  s.field = r.field;
  s.dim = w.size();
  for (const auto& m : r.action) {
    Matrix<FFElem> a(s.dim, s.dim, r.zero());
    for (size_t i = 0; i < s.dim; ++i) {
      Row img = mat_row_mul(w.row(i), m);
      // coefficients read off the pivot columns of the reduced basis
      for (size_t t = 0; t < s.dim; ++t) a.at(i, t) = img[w.pivot(t)];
    }
    s.action.push_back(std::move(a));
  }
  return s;
}

Representation quot_rep(const Representation& r, const RowBasis& w) {
  std::vector<size_t> complement;
  {
    std::vector<bool> is_pivot(r.dim, false);
    for (size_t t = 0; t < w.size(); ++t) is_pivot[w.pivot(t)] = true;
    for (size_t j = 0; j < r.dim; ++j)
      if (!is_pivot[j]) complement.push_back(j);
  }
  Representation q;
  q.group = r.group;
  q.field = r.field;
  q.dim = complement.size();
  for (const auto& m : r.action) {
    Matrix<FFElem> a(q.dim, q.dim, r.zero());
    for (size_t i = 0; i < q.dim; ++i) {
      Row img(r.dim, r.zero());
      for (size_t j = 0; j < r.dim; ++j) img[j] = m.at(complement[i], j);
      w.reduce(img);
      for (size_t t = 0; t < q.dim; ++t) a.at(i, t) = img[complement[t]];
    }
    q.action.push_back(std::move(a));
  }
  return q;
}

std::int64_t projective_count(std::int64_t q, size_t nu) {
  std::int64_t total = 1, power = 1;
  for (size_t i = 0; i + 1 < nu; ++i) {
    power *= q;
    total += power;
    if (total > (std::int64_t(1) << 40)) return total;  // saturate
  }
  return total;  // (q^nu - 1) / (q - 1)
}

// Enumerates one representative per 1-dimensional subspace of the span
// (first nonzero coefficient normalized to 1).
template <typename Fn>
bool for_each_projective(const RowBasis& basis, const FiniteField& f, Fn&& fn) {
  const size_t nu = basis.size();
  const std::int64_t q = f.order();
  for (size_t lead = 0; lead < nu; ++lead) {
    // coefficients: c_lead = 1, c_i free for i > lead, c_i = 0 for i < lead
    size_t free_count = nu - lead - 1;
    std::vector<std::int32_t> c(free_count, 0);
    while (true) {
      Row v = basis.row(lead);
      for (size_t i = 0; i < free_count; ++i) {
        if (c[i] == 0) continue;
        FFElem coeff(f, c[i]);
        const Row& b = basis.row(lead + 1 + i);
        for (size_t j = 0; j < v.size(); ++j) v[j] += coeff * b[j];
      }
      if (!fn(v)) return false;
      size_t k = 0;
      while (k < free_count && c[k] == static_cast<std::int32_t>(q - 1)) {
        c[k] = 0;
        ++k;
      }
      if (k == free_count) break;
      ++c[k];
    }
  }
  return true;
}

struct Split {
  RowBasis submodule;
  explicit Split(RowBasis b) : submodule(std::move(b)) {}
};

// One meataxe pass: either finds a proper invariant subspace, certifies
// irreducibility, or gives up (budget).
std::optional<RowBasis> find_submodule_or_certify(const Representation& r,
                                                  std::mt19937_64& rng,
                                                  const ChopOptions& opt) {
  const FiniteField& f = *r.field;
  std::vector<Matrix<FFElem>> transposed;
  for (const auto& m : r.action) transposed.push_back(m.transposed());

  for (int trial = 0; trial < opt.budget; ++trial) {
    Matrix<FFElem> theta = random_algebra_element(r, rng, opt);
    RowBasis kernel = left_kernel(theta, f);
    const size_t nu = kernel.size();
    if (nu == 0) continue;

    // cheap split attempts from the kernel basis vectors
    std::optional<RowBasis> found;
    for (size_t i = 0; i < nu && !found; ++i) {
      RowBasis s = spin(kernel.row(i), r.action, f);
      if (s.size() < r.dim) found = std::move(s);
    }
    if (found) return found;

    // full enumeration needed for a certificate
    if (projective_count(f.order(), nu) >
        static_cast<std::int64_t>(opt.enum_cap))
      continue;
    bool all_full = for_each_projective(kernel, f, [&](const Row& v) {
      RowBasis s = spin(v, r.action, f);
      if (s.size() < r.dim) {
        found = std::move(s);
        return false;
      }
      return true;
    });
    if (!all_full) return found;

    RowBasis co_kernel = left_kernel(theta.transposed(), f);
    all_full = for_each_projective(co_kernel, f, [&](const Row& w) {
      RowBasis s = spin(w, transposed, f);
      if (s.size() < r.dim) {
        // annihilator of a transposed-action submodule is a submodule
        Matrix<FFElem> wm(s.size(), r.dim, r.zero());
        for (size_t i = 0; i < s.size(); ++i)
          for (size_t j = 0; j < r.dim; ++j) wm.at(i, j) = s.row(i)[j];
        RowBasis ann(f, r.dim);
        for (auto& v : kernel_basis(wm)) ann.add(std::move(v));
        found = std::move(ann);
        return false;
      }
      return true;
    });
    if (!all_full) return found;

    return std::nullopt;  // certified irreducible
  }
  throw RetryBudgetExceeded("no conclusive algebra element within " +
                            std::to_string(opt.budget) + " trials");
}

void chop_rec(const Representation& r, std::mt19937_64& rng,
              const ChopOptions& opt,
              std::map<std::string, ChopFactor>& out) {
  if (r.dim == 0) return;
  std::optional<RowBasis> sub;
  if (r.dim > 1) sub = find_submodule_or_certify(r, rng, opt);
  if (!sub) {
    std::string fp = brauer_fingerprint(r);
    auto it = out.find(fp);
    if (it == out.end())
      out.emplace(fp, ChopFactor{r, 1, fp});
    else
      it->second.multiplicity += 1;
    return;
  }
  chop_rec(sub_rep(r, *sub), rng, opt, out);
  chop_rec(quot_rep(r, *sub), rng, opt, out);
}

}  // namespace

ChopResult chop(const Representation& m, std::uint64_t seed,
                const ChopOptions& options) {
  std::mt19937_64 rng(seed);
  std::map<std::string, ChopFactor> acc;
  chop_rec(m, rng, options, acc);
  ChopResult result;
  for (auto& [fp, factor] : acc) result.factors.push_back(std::move(factor));
  std::stable_sort(result.factors.begin(), result.factors.end(),
                   [](const ChopFactor& a, const ChopFactor& b) {
                     if (a.simple.dim != b.simple.dim)
                       return a.simple.dim < b.simple.dim;
                     return a.fingerprint < b.fingerprint;
                   });
  if (result.dimension_weighted_count() != static_cast<std::int64_t>(m.dim))
    throw InvariantViolation("chop lost dimensions");  // cannot happen
  return result;
}

}  // namespace modrep
