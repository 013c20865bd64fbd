#include "modrep/int_matrix.hpp"

namespace modrep {

IntMatrix int_matpow(const IntMatrix& b, std::uint64_t n) {
  if (!b.is_square()) throw DimensionMismatch("int_matpow: square only");
  IntMatrix acc = IntMatrix::identity(b.rows);
  IntMatrix base = b;
  while (n != 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

BigInt int_det(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("int_det: square only");
  const size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  BigInt prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      size_t piv = k + 1;
      while (piv < n && w.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        BigInt t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        w.at(i, j) = t / prev;  // exact by Bareiss
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  BigInt d = w.at(n - 1, n - 1);
  return sign < 0 ? BigInt(-d) : d;
}

std::optional<Matrix<Rational>> divide_right(const IntMatrix& a,
                                             const IntMatrix& b) {
  if (!b.is_square() || a.cols != b.rows)
    throw DimensionMismatch("divide_right");
  // a b^{-1} = (b^T \ a^T)^T
  auto xt = solve(b.to_rational().transposed(), a.to_rational().transposed());
  if (!xt) return std::nullopt;
  if (rref(b.to_rational()).rank != b.rows) return std::nullopt;
  return xt->transposed();
}

bool to_nonneg_int_matrix(const Matrix<Rational>& m, IntMatrix& out) {
  out = IntMatrix(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      const Rational& v = m.at(i, j);
      if (!is_integer(v) || v < 0) return false;
      out.at(i, j) = numerator(v);
    }
  return true;
}

}  // namespace modrep
