#pragma once

#include <optional>
#include <vector>

#include "modrep/errors.hpp"
#include "modrep/matrix.hpp"
#include "modrep/rational.hpp"

namespace modrep {

/// Dense integer matrix with arbitrary-precision entries.
struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, BigInt(0)) {}
  IntMatrix(size_t r, size_t c, std::vector<BigInt> entries)
      : rows(r), cols(c), a(std::move(entries)) {
    if (a.size() != rows * cols) throw DimensionMismatch("entry count");
  }
  static IntMatrix from_rows(
      const std::vector<std::vector<std::int64_t>>& rows_in) {
    IntMatrix m(rows_in.size(), rows_in.empty() ? 0 : rows_in[0].size());
    for (size_t i = 0; i < m.rows; ++i) {
      if (rows_in[i].size() != m.cols) throw DimensionMismatch("ragged rows");
      for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
    }
    return m;
  }
  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  BigInt& at(size_t i, size_t j) { return a[i * cols + j]; }
  const BigInt& at(size_t i, size_t j) const { return a[i * cols + j]; }

  IntMatrix transposed() const {
    IntMatrix t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw DimensionMismatch("integer matrix product");
    IntMatrix z(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
      for (size_t k = 0; k < x.cols; ++k) {
        const BigInt& v = x.at(i, k);
        if (v == 0) continue;
        for (size_t j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
      }
    return z;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  bool is_square() const { return rows == cols; }

  Matrix<Rational> to_rational() const {
    Matrix<Rational> m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(at(i, j));
    return m;
  }
};

/// b^n by binary exponentiation.
IntMatrix int_matpow(const IntMatrix& b, std::uint64_t n);

/// Exact determinant via fraction-free (Bareiss) elimination.
BigInt int_det(const IntMatrix& m);

/// x·b = a over ℚ, i.e. a·b⁻¹; nullopt when b is singular.
std::optional<Matrix<Rational>> divide_right(const IntMatrix& a,
                                             const IntMatrix& b);

/// Is every entry of the rational matrix a nonnegative integer? If so fills
/// `out`.
bool to_nonneg_int_matrix(const Matrix<Rational>& m, IntMatrix& out);

}  // namespace modrep
