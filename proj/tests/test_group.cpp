#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "modrep/group.hpp"

using namespace modrep;

TEST_CASE("trivial group") {
  FiniteGroup g = generate_group({ResidueMatrix::identity(3, 2)});
  CHECK(g.order() == 1);
  CHECK(g.classes().count() == 1);
}

TEST_CASE("SL2 over Z/3 and Z/9 via explicit generators") {
  // |SL2(Z/p)| = p(p^2-1), and each level multiplies by p^3
  std::vector<ResidueMatrix> gens3 = {
      ResidueMatrix::from_rows(3, {{1, 1}, {0, 1}}),
      ResidueMatrix::from_rows(3, {{0, -1}, {1, 0}})};
  CHECK(generate_group(gens3).order() == 24);

  std::vector<ResidueMatrix> gens9 = {
      ResidueMatrix::from_rows(9, {{1, 1}, {0, 1}}),
      ResidueMatrix::from_rows(9, {{0, -1}, {1, 0}})};
  CHECK(generate_group(gens9).order() == 648);
}

TEST_CASE("generate_group rejects singular generators and tiny caps") {
  CHECK_THROWS_AS(generate_group({ResidueMatrix::from_rows(9, {{3, 0}, {0, 3}})}),
                  NotInvertible);
  std::vector<ResidueMatrix> gens = {
      ResidueMatrix::from_rows(9, {{1, 1}, {0, 1}}),
      ResidueMatrix::from_rows(9, {{0, -1}, {1, 0}})};
  CHECK_THROWS_AS(generate_group(gens, 100), CapExceeded);
}

TEST_CASE("sl2_over orders match the formula") {
  CHECK(sl2_over(3, 1).order() == 24);
  CHECK(sl2_over(3, 2).order() == 648);
  CHECK(sl2_over(2, 1).order() == 6);
  CHECK(sl2_over(3, 3).order() == 17496);
  CHECK(sl2_over(5, 1).order() == 120);
}

TEST_CASE("conjugacy classes of SL2(Z/3)") {
  FiniteGroup g = sl2_over(3, 1);
  const auto& c = g.classes();
  CHECK(c.count() == 7);
  CHECK(std::accumulate(c.sizes.begin(), c.sizes.end(), std::int64_t(0)) == 24);
  for (size_t i = 0; i < c.count(); ++i) {
    CHECK(24 % c.sizes[i] == 0);
    CHECK(c.sizes[i] * c.centralizer_orders[i] == 24);
  }
  CHECK(c.exponent == 12);
}

TEST_CASE("p-regular classes") {
  FiniteGroup g1 = sl2_over(3, 1);
  auto pr1 = p_regular_classes(g1.classes(), 3);
  REQUIRE(pr1.size() == 3);
  std::multiset<std::int64_t> orders;
  for (int c : pr1) orders.insert(g1.classes().element_orders[size_t(c)]);
  CHECK(orders == std::multiset<std::int64_t>{1, 2, 4});

  FiniteGroup g2 = sl2_over(3, 2);
  CHECK(p_regular_classes(g2.classes(), 3).size() == 3);

  // p not dividing |G|: all classes are p-regular
  CHECK(p_regular_classes(g1.classes(), 5).size() == g1.classes().count());
}

TEST_CASE("p-regular set closed under coprime power maps") {
  FiniteGroup g = sl2_over(3, 1);
  const auto& c = g.classes();
  auto pr = p_regular_classes(c, 3);
  std::set<int> pr_set(pr.begin(), pr.end());
  for (int cls : pr)
    for (std::int64_t k = 1; k < 24; ++k) {
      if (std::gcd(k, std::int64_t(24)) != 1) continue;
      CHECK(pr_set.count(power_class(g, c, cls, k)) == 1);
    }
}

TEST_CASE("reduction map SL2(Z/9) -> SL2(Z/3)") {
  FiniteGroup g2 = sl2_over(3, 2);
  FiniteGroup g1 = sl2_over(3, 1);
  QuotientMap q = reduction_map(g2, g1);
  CHECK(q.kernel.size() == 27);  // 648 / 24
  // kernel is a p-group: all nontrivial kernel element orders are powers of 3
  for (int k : q.kernel) {
    std::int64_t ord = g2.order_of(k);
    while (ord % 3 == 0) ord /= 3;
    CHECK(ord == 1);
  }
}

TEST_CASE("identity-level reduction map") {
  FiniteGroup g = sl2_over(3, 1);
  QuotientMap q = reduction_map(g, g);
  CHECK(q.kernel.size() == 1);
  for (int x = 0; x < g.order(); ++x) CHECK(q.image[size_t(x)] == x);
}

TEST_CASE("kernel of SL2(Z/27) -> SL2(Z/9) is elementary abelian of exponent 3") {
  FiniteGroup g3 = sl2_over(3, 3);
  FiniteGroup g2 = sl2_over(3, 2);
  QuotientMap q = reduction_map(g3, g2);
  CHECK(q.kernel.size() == 27);
  for (int k : q.kernel)
    if (k != g3.identity()) CHECK(g3.order_of(k) == 3);
  // abelian
  for (int a : q.kernel)
    for (int b : q.kernel) CHECK(g3.mul(a, b) == g3.mul(b, a));
}

TEST_CASE("quotient maps send classes into classes") {
  FiniteGroup g2 = sl2_over(3, 2);
  FiniteGroup g1 = sl2_over(3, 1);
  QuotientMap q = reduction_map(g2, g1);
  const auto& c2 = g2.classes();
  const auto& c1 = g1.classes();
  for (size_t cls = 0; cls < c2.count(); ++cls) {
    int target = -1;
    for (int x = 0; x < g2.order(); ++x) {
      if (c2.class_of[size_t(x)] != static_cast<int>(cls)) continue;
      int img_cls = c1.class_of[size_t(q.image[size_t(x)])];
      if (target < 0) target = img_cls;
      CHECK(img_cls == target);
    }
  }
}

TEST_CASE("hom_quotient_map: S3 onto C2") {
  // S3 inside GL2(Z/3): sigma = [[1,1],[0,1]] (order 3), tau = [[2,0],[0,1]]
  FiniteGroup s3 = generate_group({ResidueMatrix::from_rows(3, {{1, 1}, {0, 1}}),
                                   ResidueMatrix::from_rows(3, {{2, 0}, {0, 1}})});
  REQUIRE(s3.order() == 6);
  FiniteGroup c2 = generate_group({ResidueMatrix::from_rows(3, {{2, 0}, {0, 1}})});
  REQUIRE(c2.order() == 2);
  QuotientMap q = hom_quotient_map(s3, c2, {c2.identity(), c2.generators()[0]});
  CHECK(q.kernel.size() == 3);
  CHECK(s3.classes().count() == 3);

  // inconsistent images are rejected
  CHECK_THROWS_AS(
      hom_quotient_map(s3, c2, {c2.generators()[0], c2.generators()[0]}),
      NotAHomomorphism);
}

TEST_CASE("element words reconstruct elements") {
  FiniteGroup g = sl2_over(3, 2);
  for (int x : {0, 1, 5, 100, 647}) {
    auto w = g.word_of(x);
    int acc = g.identity();
    for (int gi : w) acc = g.mul(acc, g.generators()[size_t(gi)]);
    CHECK(acc == x);
  }
}
