#include "modrep/characters.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "modrep/meataxe.hpp"

namespace modrep {

namespace {

bool is_prime_int(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Subspace of F^n kept as rows in full reduced echelon form.
struct EchelonRows {
  std::vector<std::vector<FFElem>> rows;
  std::vector<size_t> pivots;

  void add(std::vector<FFElem> v, const FiniteField& f) {
    for (size_t t = 0; t < rows.size(); ++t) {
      FFElem c = v[pivots[t]];
      if (c.is_zero()) continue;
      for (size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[t][j];
    }
    size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return;
    FFElem inv = FFElem(f, f.one()) / v[p];
    for (size_t j = p; j < v.size(); ++j) v[j] *= inv;
    for (size_t t = 0; t < rows.size(); ++t) {
      FFElem c = rows[t][p];
      if (c.is_zero()) continue;
      for (size_t j = 0; j < v.size(); ++j) rows[t][j] -= c * v[j];
    }
    size_t at = 0;
    while (at < pivots.size() && pivots[at] < p) ++at;
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
    pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(at), p);
  }
};

std::vector<FFElem> row_times_matrix(const std::vector<FFElem>& v,
                                     const Matrix<FFElem>& m,
                                     const FFElem& zero) {
  std::vector<FFElem> out(m.cols(), zero);
  for (size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

}  // namespace

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  if (a.classes != b.classes)
    throw DimensionMismatch("class functions on different class lists");
  std::vector<Cyclotomic> vals(a.values.size());
  for (size_t i = 0; i < vals.size(); ++i) vals[i] = a.values[i] * b.values[i];
  return ClassFunction(a.classes, std::move(vals));
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  if (a.classes != b.classes)
    throw DimensionMismatch("class functions on different class lists");
  std::vector<Cyclotomic> vals(a.values.size());
  for (size_t i = 0; i < vals.size(); ++i) vals[i] = a.values[i] + b.values[i];
  return ClassFunction(a.classes, std::move(vals));
}

std::int64_t p_prime_part(std::int64_t n, std::int64_t p) {
  while (n % p == 0) n /= p;
  return n;
}

CharacterTable dixon_character_table(const FiniteGroup& g,
                                     std::int64_t prime_bound) {
  const ConjugacyClassData& ccd = g.classes();
  const size_t r = ccd.count();
  const std::int64_t n = ccd.group_order;
  const std::int64_t e = ccd.exponent;

  // smallest prime l ≡ 1 (mod e) with l^2 > 4|G|
  std::int64_t ell = 0;
  for (std::int64_t cand = e + 1;; cand += e) {
    if (cand > prime_bound)
      throw NoSuitablePrime("no prime ≡ 1 mod " + std::to_string(e) +
                            " below " + std::to_string(prime_bound));
    if (cand * cand > 4 * n && is_prime_int(cand)) {
      ell = cand;
      break;
    }
  }
  const FiniteField& fl = make_field(ell, 1);
  const FFElem zero(fl, 0);
  const FFElem one(fl, fl.one());

  // transposed class multiplication matrices: row vectors of central
  // character values are right-eigenvectors of each of them
  std::vector<Matrix<FFElem>> cmats;
  {
    std::vector<std::vector<std::int64_t>> counts(
        r, std::vector<std::int64_t>(r * r, 0));
    for (size_t k = 0; k < r; ++k) {
      int zk = ccd.reps[k];
      for (int x = 0; x < n; ++x) {
        size_t i = static_cast<size_t>(ccd.class_of[static_cast<size_t>(x)]);
        size_t j = static_cast<size_t>(
            ccd.class_of[static_cast<size_t>(g.mul(g.inv(x), zk))]);
        counts[i][j * r + k] += 1;
      }
    }
    for (size_t i = 0; i < r; ++i) {
      Matrix<FFElem> b(r, r, zero);  // b[k][j] = a_{ijk}
      for (size_t j = 0; j < r; ++j)
        for (size_t k = 0; k < r; ++k)
          b.at(k, j) = FFElem(fl, fl.from_int(counts[i][j * r + k]));
      cmats.push_back(std::move(b));
    }
  }

  // split the row space into common eigenspaces
  std::vector<EchelonRows> spaces(1);
  for (size_t j = 0; j < r; ++j) {
    std::vector<FFElem> unit(r, zero);
    unit[j] = one;
    spaces[0].add(std::move(unit), fl);
  }
  for (size_t i = 1; i < r; ++i) {
    bool all_split = true;
    for (const auto& s : spaces)
      if (s.rows.size() > 1) all_split = false;
    if (all_split) break;

    std::vector<EchelonRows> next;
    for (auto& space : spaces) {
      const size_t d = space.rows.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      Matrix<FFElem> restr(d, d, zero);
      for (size_t t = 0; t < d; ++t) {
        auto img = row_times_matrix(space.rows[t], cmats[i], zero);
        for (size_t s = 0; s < d; ++s) restr.at(t, s) = img[space.pivots[s]];
      }
      auto cp = charpoly(restr);
      size_t found_dims = 0;
      for (std::int64_t lam = 0; lam < ell && found_dims < d; ++lam) {
        FFElem lv(fl, static_cast<std::int32_t>(lam));
        FFElem acc = zero;
        for (size_t t = cp.size(); t-- > 0;) acc = acc * lv + cp[t];
        if (!acc.is_zero()) continue;
        Matrix<FFElem> shifted = restr;
        for (size_t t = 0; t < d; ++t) shifted.at(t, t) -= lv;
        // row eigenvectors: c with c(R - lambda) = 0
        auto ker = kernel_basis(shifted.transposed());
        if (ker.empty()) continue;
        EchelonRows eig;
        for (const auto& c : ker) {
          std::vector<FFElem> ambient(r, zero);
          for (size_t t = 0; t < d; ++t) {
            if (c[t].is_zero()) continue;
            for (size_t j = 0; j < r; ++j)
              ambient[j] += c[t] * space.rows[t][j];
          }
          eig.add(std::move(ambient), fl);
        }
        found_dims += eig.rows.size();
        next.push_back(std::move(eig));
      }
      if (found_dims != d)
        throw VerificationFailed("class matrix did not split its subspace");
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces)
    if (s.rows.size() != 1)
      throw VerificationFailed("central characters not separated");
  if (spaces.size() != r)
    throw VerificationFailed("wrong number of central characters");

  // class of inverses and class sizes mod l
  std::vector<size_t> inv_class(r);
  std::vector<FFElem> size_inv(r);
  for (size_t k = 0; k < r; ++k) {
    inv_class[k] = static_cast<size_t>(
        ccd.class_of[static_cast<size_t>(g.inv(ccd.reps[k]))]);
    size_inv[k] = one / FFElem(fl, fl.from_int(ccd.sizes[k]));
  }
  FFElem order_l(fl, fl.from_int(n));

  // element of multiplicative order e mod l
  FFElem z = FFElem(fl, fl.pow(fl.generator(), (ell - 1) / e));

  struct RawRow {
    std::int64_t degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<RawRow> raw;
  for (const auto& space : spaces) {
    std::vector<FFElem> w = space.rows[0];
    if (w[0].is_zero())
      throw VerificationFailed("central character vanishes at the identity");
    FFElem scale = one / w[0];
    for (auto& x : w) x *= scale;

    // degree^2 = |G| / sum_k w_k w_{k*} / n_k
    FFElem s = zero;
    for (size_t k = 0; k < r; ++k) s += w[k] * w[inv_class[k]] * size_inv[k];
    if (s.is_zero()) throw VerificationFailed("degree formula degenerated");
    FFElem deg_sq = order_l / s;
    std::int64_t degree = 0;
    for (std::int64_t d = 1; d * d <= n; ++d)
      if (FFElem(fl, fl.from_int(d * d)) == deg_sq) {
        degree = d;
        break;
      }
    if (degree == 0) throw VerificationFailed("no integer degree matches");
    FFElem deg_l(fl, fl.from_int(degree));

    RawRow row;
    row.degree = degree;
    row.values.resize(r);
    for (size_t k = 0; k < r; ++k) {
      const std::int64_t dk = ccd.element_orders[k];
      // chi(g^s) mod l for s = 0..dk-1
      std::vector<FFElem> chi_pow(static_cast<size_t>(dk));
      for (std::int64_t s2 = 0; s2 < dk; ++s2) {
        size_t kappa = static_cast<size_t>(
            ccd.class_of[static_cast<size_t>(g.power(ccd.reps[k], s2))]);
        chi_pow[static_cast<size_t>(s2)] = w[kappa] * deg_l * size_inv[kappa];
      }
      FFElem zd = FFElem(fl, fl.pow(z.code(), e / dk));
      FFElem dk_inv = one / FFElem(fl, fl.from_int(dk));
      Cyclotomic value;
      std::int64_t mult_total = 0;
      for (std::int64_t j = 0; j < dk; ++j) {
        FFElem mj = zero;
        for (std::int64_t s2 = 0; s2 < dk; ++s2)
          mj += chi_pow[static_cast<size_t>(s2)] *
                FFElem(fl, fl.pow(zd.code(), (-j * s2) % (ell - 1) + (ell - 1)));
        mj *= dk_inv;
        std::int64_t m_int = mj.code();  // prime field: code is the residue
        if (m_int > degree)
          throw VerificationFailed("eigenvalue multiplicity out of range");
        mult_total += m_int;
        if (m_int != 0)
          value += Cyclotomic::zeta(e, (e / dk) * j) * Cyclotomic(Rational(m_int));
      }
      if (mult_total != degree)
        throw VerificationFailed("eigenvalue multiplicities do not sum");
      row.values[k] = std::move(value);
    }
    raw.push_back(std::move(row));
  }

  std::sort(raw.begin(), raw.end(), [](const RawRow& a, const RawRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (size_t k = 0; k < a.values.size(); ++k) {
      int c = Cyclotomic::compare(a.values[k], b.values[k]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  // checks: degree identities and exact row orthogonality
  std::int64_t deg_sq_sum = 0;
  for (const auto& row : raw) {
    deg_sq_sum += row.degree * row.degree;
    if (n % row.degree != 0)
      throw VerificationFailed("degree does not divide the group order");
  }
  if (deg_sq_sum != n)
    throw VerificationFailed("sum of squared degrees misses the group order");
  for (size_t a = 0; a < r; ++a)
    for (size_t b = a; b < r; ++b) {
      Cyclotomic acc;
      for (size_t k = 0; k < r; ++k)
        acc += Cyclotomic(Rational(ccd.sizes[k])) * raw[a].values[k] *
               raw[b].values[k].conj();
      Cyclotomic expect =
          a == b ? Cyclotomic(Rational(n)) : Cyclotomic(Rational(0));
      if (acc != expect) throw VerificationFailed("row orthogonality failed");
    }

  CharacterTable table;
  table.group = &g;
  table.value_order = e;
  std::vector<int> all_classes(r);
  std::iota(all_classes.begin(), all_classes.end(), 0);
  for (auto& row : raw) {
    table.degrees.push_back(row.degree);
    table.rows.emplace_back(all_classes, std::move(row.values));
  }
  return table;
}

ClassFunction brauer_character(const Representation& m,
                               const std::vector<int>& classes) {
  const FiniteGroup& g = *m.group;
  const ConjugacyClassData& ccd = g.classes();
  const FiniteField& f = *m.field;
  const std::int64_t p = f.characteristic();
  const std::int64_t e_prime = p_prime_part(ccd.exponent, p);

  std::vector<std::int64_t> orders;
  for (int c : classes) {
    std::int64_t d = ccd.element_orders[static_cast<size_t>(c)];
    if (d % p == 0)
      throw NotPRegular("class has order divisible by " + std::to_string(p));
    orders.push_back(d);
  }

  // one splitting extension for every listed class order
  const int e0 = f.degree();
  int t = 1;
  for (;; ++t) {
    std::int64_t q = 1;
    bool too_big = false;
    for (int i = 0; i < e0 * t; ++i) {
      q *= p;
      if (q > FiniteField::kMaxOrder) {
        too_big = true;
        break;
      }
    }
    if (too_big)
      throw ExtensionTooLarge("splitting extension exceeds the field bound");
    bool ok = true;
    for (std::int64_t d : orders)
      if (d > 1 && (q - 1) % d != 0) ok = false;
    if (ok) break;
  }
  const FiniteField& ext = make_field(p, e0 * t);

  // embed the module field: send the primitive element to a root of its
  // modulus inside ext
  std::vector<std::int32_t> embed(static_cast<size_t>(f.order()));
  {
    std::int32_t root = -1;
    const auto& mod = f.modulus();
    for (std::int32_t cand = 0; cand < ext.order() && root < 0; ++cand) {
      std::int32_t acc = 0;
      for (size_t i = mod.size(); i-- > 0;) {
        acc = ext.mul(acc, cand);
        acc = ext.add(acc, ext.from_int(mod[i]));
      }
      if (acc == 0) root = cand;
    }
    if (root < 0)
      throw VerificationFailed("modulus has no root in the extension");
    for (std::int32_t code = 0; code < f.order(); ++code) {
      auto coords = f.coords(code);
      std::int32_t acc = 0, power = ext.one();
      for (size_t i = 0; i < coords.size(); ++i) {
        acc = ext.add(acc, ext.mul(ext.from_int(coords[i]), power));
        power = ext.mul(power, root);
      }
      embed[static_cast<size_t>(code)] = acc;
    }
  }

  const FFElem ext_zero(ext, 0);
  std::vector<Cyclotomic> values;
  for (size_t ci = 0; ci < classes.size(); ++ci) {
    const std::int64_t d = orders[ci];
    Matrix<FFElem> mat = m.matrix_of(ccd.reps[static_cast<size_t>(classes[ci])]);
    Matrix<FFElem> me(m.dim, m.dim, ext_zero);
    for (size_t i = 0; i < m.dim; ++i)
      for (size_t j = 0; j < m.dim; ++j)
        me.at(i, j) = FFElem(ext, embed[static_cast<size_t>(mat.at(i, j).code())]);

    Cyclotomic value(Rational(0));
    value = value.embedded(e_prime);
    std::int64_t mult_total = 0;
    for (std::int64_t j = 0; j < d; ++j) {
      FFElem lambda(ext, ext.pow(ext.generator(), j * ((ext.order() - 1) / d)));
      Matrix<FFElem> shifted = me;
      for (size_t i = 0; i < m.dim; ++i) shifted.at(i, i) -= lambda;
      size_t mult = m.dim - rref(shifted).rank;
      if (mult == 0) continue;
      mult_total += static_cast<std::int64_t>(mult);
      // teichmuller lift of lambda, written directly in Q(zeta_{e'})
      value += Cyclotomic(Rational(static_cast<std::int64_t>(mult))) *
               Cyclotomic::zeta(e_prime, (e_prime / d) * j);
    }
    if (mult_total != static_cast<std::int64_t>(m.dim))
      throw VerificationFailed("class representative is not diagonalizable");
    values.push_back(std::move(value));
  }
  return ClassFunction(classes, std::move(values));
}

std::string brauer_fingerprint(const Representation& m) {
  const ConjugacyClassData& ccd = m.group->classes();
  auto preg = p_regular_classes(ccd, m.field->characteristic());
  ClassFunction cf = brauer_character(m, preg);
  std::ostringstream os;
  os << m.dim;
  for (const auto& v : cf.values) {
    os << "|";
    for (const auto& c : v.canonical_coords()) os << rational_to_string(c) << ",";
  }
  return os.str();
}

ClassFunction restrict_to_p_regular(const ClassFunction& chi,
                                    const ConjugacyClassData& ccd,
                                    std::int64_t p) {
  std::vector<int> preg = p_regular_classes(ccd, p);
  std::vector<Cyclotomic> vals;
  for (int c : preg) {
    auto it = std::find(chi.classes.begin(), chi.classes.end(), c);
    if (it == chi.classes.end())
      throw DimensionMismatch("class function missing a p-regular class");
    vals.push_back(chi.values[static_cast<size_t>(it - chi.classes.begin())]);
  }
  return ClassFunction(std::move(preg), std::move(vals));
}

std::vector<Rational> decompose(const ClassFunction& target,
                                const std::vector<ClassFunction>& basis) {
  if (basis.empty()) throw SingularBasis("empty basis");
  const size_t n = target.classes.size();
  for (const auto& b : basis)
    if (b.classes != target.classes)
      throw DimensionMismatch("basis and target class lists differ");

  Matrix<Cyclotomic> a(n, basis.size());
  Matrix<Cyclotomic> rhs(n, 1);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < basis.size(); ++j) a.at(i, j) = basis[j].values[i];
    rhs.at(i, 0) = target.values[i];
  }
  if (rref(a).rank != basis.size())
    throw SingularBasis("basis class functions are dependent");
  auto x = solve(a, rhs);
  if (!x) throw NoSolution("target outside the span of the basis");
  std::vector<Rational> out;
  for (size_t j = 0; j < basis.size(); ++j) {
    const Cyclotomic& c = x->at(j, 0);
    if (!c.is_rational())
      throw VerificationFailed("decomposition coefficient not rational: " +
                               c.str());
    out.push_back(c.as_rational());
  }
  return out;
}

BrauerCharacterTable brauer_character_table(const FiniteGroup& g,
                                            const FiniteField& field,
                                            std::uint64_t seed) {
  const ConjugacyClassData& ccd = g.classes();
  const std::int64_t p = field.characteristic();
  std::vector<int> preg = p_regular_classes(ccd, p);
  const size_t target = preg.size();

  Representation seed_module;
  bool have_natural = true;
  try {
    seed_module = natural_module(g, field);
  } catch (const FieldMismatch&) {
    have_natural = false;
  }
  if (!have_natural) {
    if (g.order() > 5000)
      throw CapExceeded("regular module too large for simple discovery");
    seed_module = regular_module(g, field);
  }

  std::map<std::string, Representation> found;
  std::deque<Representation> worklist{seed_module};
  int chopped = 0;
  const int module_budget = 64;
  while (found.size() < target) {
    if (worklist.empty() || chopped >= module_budget)
      throw VerificationFailed(
          "simple discovery stalled before reaching the Brauer count");
    Representation m = std::move(worklist.front());
    worklist.pop_front();
    ++chopped;

    ChopResult res;
    bool ok = false;
    for (int attempt = 0; attempt < 5 && !ok; ++attempt) {
      try {
        res = chop(m, seed + 1000 * static_cast<std::uint64_t>(attempt));
        ok = true;
      } catch (const RetryBudgetExceeded&) {
        if (attempt == 4) throw;
      }
    }
    for (auto& factor : res.factors) {
      if (found.count(factor.fingerprint)) continue;
      found.emplace(factor.fingerprint, factor.simple);
      worklist.push_back(tensor(seed_module, factor.simple));
    }
  }

  BrauerCharacterTable table;
  table.group = &g;
  table.field = &field;
  table.p = p;
  table.p_regular = preg;
  table.value_order = p_prime_part(ccd.exponent, p);

  std::vector<std::pair<ClassFunction, Representation>> entries;
  for (auto& [fp, simple] : found) {
    // splitting witness: the endomorphism ring must be one-dimensional
    if (hom_dim(simple, simple) != 1)
      throw VerificationFailed(
          "simple is not absolutely irreducible; field is not splitting");
    entries.emplace_back(brauer_character(simple, preg), simple);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second.dim != b.second.dim) return a.second.dim < b.second.dim;
    for (size_t k = 0; k < a.first.values.size(); ++k) {
      int c = Cyclotomic::compare(a.first.values[k], b.first.values[k]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  for (auto& [cf, simple] : entries) {
    table.dims.push_back(static_cast<std::int64_t>(simple.dim));
    table.rows.push_back(std::move(cf));
    table.simples.push_back(std::move(simple));
  }

  // rows must be linearly independent over the cyclotomic field
  Matrix<Cyclotomic> m(table.rows.size(), preg.size());
  for (size_t i = 0; i < table.rows.size(); ++i)
    for (size_t j = 0; j < preg.size(); ++j)
      m.at(i, j) = table.rows[i].values[j];
  if (rref(m).rank != table.rows.size())
    throw VerificationFailed("Brauer characters are linearly dependent");
  return table;
}

}  // namespace modrep
