#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modrep/int_matrix.hpp"
#include "modrep/matrix.hpp"

using namespace modrep;

namespace {

Matrix<Rational> rat(const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix<Rational> m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Rational(rows[i][j]);
  return m;
}

// the paper's worked-example matrices
const IntMatrix kC1 = IntMatrix::from_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, 3}});
const IntMatrix kC2 =
    IntMatrix::from_rows({{27, 18, 0}, {18, 21, 0}, {0, 0, 81}});
const IntMatrix kC3 =
    IntMatrix::from_rows({{567, 540, 0}, {540, 549, 0}, {0, 0, 2187}});
const IntMatrix kB = IntMatrix::from_rows({{9, 18, 0}, {6, 21, 0}, {0, 0, 27}});

}  // namespace

TEST_CASE("rref basics") {
  auto id = Matrix<Rational>::identity(3);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<size_t>{0, 1, 2});
  CHECK(r.rank == 3);

  Matrix<Rational> z(2, 2);
  auto rz = rref(z);
  CHECK(rz.rank == 0);
  CHECK(rz.pivots.empty());
  CHECK(rz.reduced == z);

  auto prop = rat({{1, 2}, {2, 4}});
  auto rp = rref(prop);
  CHECK(rp.rank == 1);
  CHECK(rp.reduced == rat({{1, 2}, {0, 0}}));
}

TEST_CASE("solve basics") {
  auto b = rat({{5}, {7}});
  auto x = solve(Matrix<Rational>::identity(2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  CHECK(!solve(rat({{1}, {1}}), rat({{1}, {2}})).has_value());

  // Brauer table of S3 mod 3 on the 3-regular classes, against (3,1):
  // 2x2 system solved by hand gives (2,1)
  auto sol = solve(rat({{1, 1}, {1, -1}}), rat({{3}, {1}}));
  REQUIRE(sol.has_value());
  CHECK(*sol == rat({{2}, {1}}));
}

TEST_CASE("solve reproduces b on random consistent systems") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    size_t n = 2 + rng() % 3, m = 2 + rng() % 3;
    Matrix<Rational> a(n, m);
    Matrix<Rational> x0(m, 1);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < m; ++j)
        a.at(i, j) = Rational(static_cast<std::int64_t>(rng() % 7) - 3);
    for (size_t j = 0; j < m; ++j)
      x0.at(j, 0) = Rational(static_cast<std::int64_t>(rng() % 7) - 3);
    auto b = a * x0;
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Matrix<Rational>::identity(3)).empty());

  Matrix<Rational> z(4, 4);
  auto kz = kernel_basis(z);
  CHECK(kz.size() == 4);

  auto k = kernel_basis(rat({{1, 1}, {1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("charpoly examples") {
  auto cp = charpoly(rat({{1, 0}, {0, 2}}));
  CHECK(cp == std::vector<Rational>{Rational(2), Rational(-3), Rational(1)});

  Matrix<Rational> z(4, 4);
  auto cz = charpoly(z);
  CHECK(cz.size() == 5);
  for (size_t i = 0; i < 4; ++i) CHECK(cz[i] == 0);
  CHECK(cz[4] == 1);

  // companion matrix of x^2+1 over GF(3)
  const FiniteField& f3 = make_field(3, 1);
  Matrix<FFElem> c(2, 2, FFElem(f3, 0));
  c.at(0, 1) = ff(f3, -1);
  c.at(1, 0) = ff(f3, 1);
  auto cf = charpoly(c);
  REQUIRE(cf.size() == 3);
  CHECK(cf[0] == ff(f3, 1));
  CHECK(cf[1] == ff(f3, 0));
  CHECK(cf[2] == ff(f3, 1));
}

TEST_CASE("Cayley-Hamilton on random 4x4 matrices") {
  std::mt19937_64 rng(23);
  const FiniteField& f9 = make_field(3, 2);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix<FFElem> m(4, 4, FFElem(f9, 0));
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j)
        m.at(i, j) = FFElem(f9, static_cast<std::int32_t>(rng() % 9));
    auto cp = charpoly(m);
    Matrix<FFElem> acc(4, 4, FFElem(f9, 0));
    Matrix<FFElem> pw = Matrix<FFElem>::identity(4, FFElem(f9, 0));
    for (size_t k = 0; k < cp.size(); ++k) {
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) acc.at(i, j) += cp[k] * pw.at(i, j);
      pw = pw * m;
    }
    CHECK(acc.is_zero());

    Matrix<Rational> q(4, 4);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j)
        q.at(i, j) = Rational(static_cast<std::int64_t>(rng() % 9) - 4);
    auto cq = charpoly(q);
    Matrix<Rational> accq(4, 4);
    Matrix<Rational> pwq = Matrix<Rational>::identity(4);
    for (size_t k = 0; k < cq.size(); ++k) {
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) accq.at(i, j) += cq[k] * pwq.at(i, j);
      pwq = pwq * q;
    }
    CHECK(accq.is_zero());
  }
}

TEST_CASE("int_matpow") {
  CHECK(int_matpow(kB, 0) == IntMatrix::identity(3));
  CHECK(int_matpow(kB, 2) * kC1 == kC3);
  IntMatrix d2(1, 1, {BigInt(2)});
  IntMatrix d = int_matpow(d2, 10);
  CHECK(d.at(0, 0) == 1024);
}

TEST_CASE("int_matpow is additive in the exponent") {
  std::mt19937_64 rng(5);
  IntMatrix b(3, 3);
  for (auto& v : b.a) v = static_cast<std::int64_t>(rng() % 5) - 2;
  for (std::uint64_t m = 0; m <= 4; ++m)
    for (std::uint64_t n = 0; n <= 4; ++n)
      CHECK(int_matpow(b, m + n) == int_matpow(b, m) * int_matpow(b, n));
}

TEST_CASE("int_det") {
  CHECK(int_det(kC1) == 9);  // 3^{7*1-5}
  CHECK(int_det(kC2) == int_pow(BigInt(3), 9));
  CHECK(int_det(IntMatrix::identity(5)) == 1);
  CHECK(int_det(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(int_det(IntMatrix::from_rows({{2, 4}, {1, 2}})) == 0);
}

TEST_CASE("int_det multiplicative on random matrices") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    size_t n = 2 + rng() % 3;
    IntMatrix a(n, n), b(n, n);
    for (auto& v : a.a) v = static_cast<std::int64_t>(rng() % 9) - 4;
    for (auto& v : b.a) v = static_cast<std::int64_t>(rng() % 9) - 4;
    CHECK(int_det(a * b) == int_det(a) * int_det(b));
  }
}

TEST_CASE("divide_right recovers B from the Cartan pair") {
  auto b = divide_right(kC2, kC1);
  REQUIRE(b.has_value());
  CHECK(*b == kB.to_rational());
  IntMatrix singular = IntMatrix::from_rows({{1, 1}, {1, 1}});
  CHECK(!divide_right(IntMatrix::identity(2), singular).has_value());
}

TEST_CASE("solve over cyclotomic entries") {
  Matrix<Cyclotomic> a(2, 2);
  a.at(0, 0) = Cyclotomic(Rational(1));
  a.at(0, 1) = Cyclotomic::zeta(4);
  a.at(1, 0) = Cyclotomic::zeta(4, 3);
  a.at(1, 1) = Cyclotomic(Rational(2));
  Matrix<Cyclotomic> x0(2, 1);
  x0.at(0, 0) = Cyclotomic(Rational(1, 2));
  x0.at(1, 0) = Cyclotomic::zeta(4) + Cyclotomic(Rational(3));
  auto b = a * x0;
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
}
