#pragma once

#include <optional>
#include <vector>

#include "modrep/cyclotomic.hpp"
#include "modrep/errors.hpp"
#include "modrep/finite_field.hpp"
#include "modrep/rational.hpp"

namespace modrep {

/// Scalar glue for the three coefficient fields. An FFElem needs its field to
/// make 0/1, so "make one like this element" takes a sample carrying context.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero(const Rational&) { return Rational(0); }
  static Rational one(const Rational&) { return Rational(1); }
  static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct FieldTraits<Cyclotomic> {
  static Cyclotomic zero(const Cyclotomic&) { return Cyclotomic(); }
  static Cyclotomic one(const Cyclotomic&) { return Cyclotomic(Rational(1)); }
  static bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
};

template <>
struct FieldTraits<FFElem> {
  static FFElem zero(const FFElem& like) {
    return like.field() ? FFElem(*like.field(), 0) : FFElem();
  }
  static FFElem one(const FFElem& like) {
    if (!like.field()) throw Error("field context required for one()");
    return FFElem(*like.field(), like.field()->one());
  }
  static bool is_zero(const FFElem& x) { return x.is_zero(); }
};

/// Dense row-major matrix over an exact field. The prototype element carries
/// field context (which finite field / which cyclotomic order) for entries
/// that are never written.
template <class F>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols, F proto = F{})
      : rows_(rows), cols_(cols), proto_(proto), a_(rows * cols, proto) {}

  static Matrix identity(size_t n, F proto = F{}) {
    Matrix m(n, n, proto);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldTraits<F>::one(proto);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const F& proto() const { return proto_; }

  F& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const F& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_, proto_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    const F proto = a.rows_ * a.cols_ ? a.proto_ : b.proto_;
    Matrix c(a.rows_, b.cols_, proto);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a.at(i, k);
        if (FieldTraits<F>::is_zero(aik)) continue;
        for (size_t j = 0; j < b.cols_; ++j)
          c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionMismatch("matrix sum");
    Matrix c = a;
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionMismatch("matrix difference");
    Matrix c = a;
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!FieldTraits<F>::is_zero(x)) return false;
    return true;
  }

 private:
  size_t rows_, cols_;
  F proto_{};
  std::vector<F> a_;
};

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<size_t> pivots;  // pivot column per pivot row
  size_t rank = 0;
};

/// Reduced row-echelon form by exact Gauss–Jordan.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> out;
  size_t r = 0;
  for (size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    size_t piv = r;
    while (piv < m.rows() && FieldTraits<F>::is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    F inv_p = FieldTraits<F>::one(m.at(r, col)) / m.at(r, col);
    for (size_t j = col; j < m.cols(); ++j) m.at(r, j) *= inv_p;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || FieldTraits<F>::is_zero(m.at(i, col))) continue;
      F factor = m.at(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= factor * m.at(r, j);
    }
    out.pivots.push_back(col);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

/// Solves a·x = b; returns nullopt when inconsistent. Free variables are set
/// to zero, so the solution is the unique one when a has full column rank.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts");
  Matrix<F> aug(a.rows(), a.cols() + b.cols(), a.proto());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  auto rr = rref(std::move(aug));
  for (size_t k = 0; k < rr.pivots.size(); ++k)
    if (rr.pivots[k] >= a.cols()) return std::nullopt;
  Matrix<F> x(a.cols(), b.cols(), a.proto());
  for (size_t k = 0; k < rr.pivots.size(); ++k)
    for (size_t j = 0; j < b.cols(); ++j)
      x.at(rr.pivots[k], j) = rr.reduced.at(k, a.cols() + j);
  return x;
}

/// Basis of the right null space {v : m·v = 0}, one column vector per basis
/// element; size cols − rank.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : rr.pivots) is_pivot[c] = true;
  F zero = FieldTraits<F>::zero(m.proto());
  F one = FieldTraits<F>::one(
      rr.rank > 0 ? rr.reduced.at(0, rr.pivots[0]) : m.proto());
  std::vector<std::vector<F>> basis;
  for (size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<F> v(m.cols(), zero);
    v[j] = one;
    for (size_t k = 0; k < rr.pivots.size(); ++k)
      v[rr.pivots[k]] = zero - rr.reduced.at(k, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
size_t nullity(const Matrix<F>& m) {
  return m.cols() - rref(m).rank;
}

/// Monic characteristic polynomial, low degree first, via similarity
/// reduction to Hessenberg form followed by the standard determinant
/// recurrence on the leading principal minors.
template <class F>
std::vector<F> charpoly(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("charpoly: square only");
  const size_t n = m.rows();
  F zero = FieldTraits<F>::zero(m.proto());
  F one = FieldTraits<F>::one(n > 0 ? m.at(0, 0) : m.proto());
  if (n == 0) return {one};

  Matrix<F> h = m;
  for (size_t k = 0; k + 2 < n; ++k) {
    size_t piv = k + 1;
    while (piv < n && FieldTraits<F>::is_zero(h.at(piv, k))) ++piv;
    if (piv == n) continue;
    if (piv != k + 1) {
      for (size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(k + 1, j));
      for (size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, k + 1));
    }
    F t = h.at(k + 1, k);
    for (size_t i = k + 2; i < n; ++i) {
      if (FieldTraits<F>::is_zero(h.at(i, k))) continue;
      F u = h.at(i, k) / t;
      for (size_t j = 0; j < n; ++j) h.at(i, j) -= u * h.at(k + 1, j);
      for (size_t j = 0; j < n; ++j) h.at(j, k + 1) += u * h.at(j, i);
    }
  }

  // p_k = charpoly of leading k x k block of the Hessenberg matrix
  std::vector<std::vector<F>> p(n + 1);
  p[0] = {one};
  for (size_t k = 1; k <= n; ++k) {
    // (x - h[k-1][k-1]) * p[k-1]
    std::vector<F> cur(k + 1, zero);
    for (size_t i = 0; i < p[k - 1].size(); ++i) {
      cur[i + 1] += p[k - 1][i];
      cur[i] -= h.at(k - 1, k - 1) * p[k - 1][i];
    }
    F run = one;
    for (size_t i = 1; i < k; ++i) {
      // subtract h[k-1-i][k-1] * (prod of subdiagonal) * p[k-1-i]
      run *= h.at(k - i, k - i - 1);
      if (FieldTraits<F>::is_zero(h.at(k - 1 - i, k - 1))) continue;
      F coeff = h.at(k - 1 - i, k - 1) * run;
      for (size_t j = 0; j < p[k - 1 - i].size(); ++j)
        cur[j] -= coeff * p[k - 1 - i][j];
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

}  // namespace modrep
