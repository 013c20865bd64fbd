#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modrep/cyclotomic.hpp"
#include "modrep/finite_field.hpp"
#include "modrep/rational.hpp"

using namespace modrep;

TEST_CASE("prime field construction") {
  const FiniteField& f3 = make_field(3, 1);
  CHECK(f3.order() == 3);
  CHECK(f3.modulus() == std::vector<std::int64_t>{0, 1});  // x
  CHECK(f3.characteristic() == 3);
}

TEST_CASE("GF(9) default modulus is x^2+1") {
  // oracle: exhaustive root check over GF(3) shows x^2+1 has no root
  for (std::int64_t x = 0; x < 3; ++x) CHECK((x * x + 1) % 3 != 0);
  const FiniteField& f9 = make_field(3, 2);
  CHECK(f9.order() == 9);
  CHECK(f9.modulus() == std::vector<std::int64_t>{1, 0, 1});
  const FiniteField& f9b = make_field(3, 2, std::vector<std::int64_t>{1, 0, 1});
  CHECK(&f9 == &f9b);  // interned
}

TEST_CASE("reducible modulus rejected") {
  // x^2+2 = (x-1)(x+1) mod 3: roots 1 and 2
  CHECK((1 * 1 + 2) % 3 == 0);
  CHECK_THROWS_AS(make_field(3, 2, std::vector<std::int64_t>{2, 0, 1}),
                  NonIrreducibleModulus);
}

TEST_CASE("field axioms exhaustive on GF(9)") {
  const FiniteField& f = make_field(3, 2);
  const std::int64_t q = f.order();
  for (std::int32_t a = 0; a < q; ++a) {
    for (std::int32_t b = 0; b < q; ++b) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      for (std::int32_t c = 0; c < q; ++c) {
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
  }
}

TEST_CASE("field axioms exhaustive on GF(8) and GF(25)") {
  for (auto [p, e] : {std::pair<std::int64_t, int>{2, 3}, {5, 2}}) {
    const FiniteField& f = make_field(p, e);
    for (std::int32_t a = 0; a < f.order(); ++a) {
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
      for (std::int32_t b = 0; b < f.order(); ++b) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.add(f.sub(a, b), b) == a);
      }
    }
  }
}

TEST_CASE("discrete log") {
  const FiniteField& f = make_field(3, 2);
  FFElem one(f, f.one());
  FFElem g(f, f.generator());
  CHECK(discrete_log(one) == 0);
  CHECK(discrete_log(g) == 1);
  CHECK(discrete_log(g * g) == 2);
  CHECK_THROWS_AS(discrete_log(FFElem(f, 0)), ZeroElement);
}

TEST_CASE("teichmuller lift on GF(9)") {
  const FiniteField& f = make_field(3, 2);
  FFElem g(f, f.generator());
  CHECK(teichmuller_lift(FFElem(f, f.one())) == Cyclotomic(Rational(1)));
  // g^2 has order 4, lifts to zeta_8^2 = zeta_4
  CHECK(teichmuller_lift(g * g) == Cyclotomic::zeta(4, 1));
  // g^4 squares to 1 and is not 1, hence equals -1; lift is -1
  FFElem g4 = g * g * g * g;
  CHECK(g4 * g4 == FFElem(f, f.one()));
  CHECK(g4 != FFElem(f, f.one()));
  CHECK(teichmuller_lift(g4) == Cyclotomic(Rational(-1)));
  CHECK_THROWS_AS(teichmuller_lift(FFElem(f, 0)), ZeroElement);
}

TEST_CASE("teichmuller lift is an injective homomorphism (exhaustive GF(9))") {
  const FiniteField& f = make_field(3, 2);
  std::vector<Cyclotomic> lifts;
  for (std::int32_t a = 1; a < f.order(); ++a)
    lifts.push_back(teichmuller_lift(FFElem(f, a)));
  for (std::int32_t a = 1; a < f.order(); ++a)
    for (std::int32_t b = 1; b < f.order(); ++b) {
      Cyclotomic lhs = teichmuller_lift(FFElem(f, f.mul(a, b)));
      CHECK(lhs == lifts[size_t(a - 1)] * lifts[size_t(b - 1)]);
    }
  for (size_t i = 0; i < lifts.size(); ++i)
    for (size_t j = i + 1; j < lifts.size(); ++j)
      CHECK(lifts[i] != lifts[j]);
}

TEST_CASE("cyclotomic basics") {
  Cyclotomic z3 = Cyclotomic::zeta(3);
  CHECK(z3.pow(3) == Cyclotomic(Rational(1)));
  CHECK(z3 * z3 * z3 == Cyclotomic(Rational(1)));
  // 1 + z + z^2 = 0 in Q(zeta_3)
  Cyclotomic s = Cyclotomic(Rational(1)) + z3 + z3 * z3;
  CHECK(s.is_zero());
  CHECK(z3 != Cyclotomic(Rational(1)));

  Cyclotomic z4 = Cyclotomic::zeta(4);
  CHECK(z4 * z4 == Cyclotomic(Rational(-1)));
  CHECK(z4 + z4.conj() == Cyclotomic(Rational(0)));
}

TEST_CASE("cyclotomic inverse and division") {
  Cyclotomic a = Cyclotomic(Rational(1)) + Cyclotomic::zeta(5);
  CHECK(a * a.inverse() == Cyclotomic(Rational(1)));
  Cyclotomic b = Cyclotomic::zeta(8, 3) - Cyclotomic(Rational(2));
  CHECK((a / b) * b == a);
}

TEST_CASE("embedding commutes with arithmetic") {
  std::mt19937_64 rng(7);
  auto random_value = [&rng](std::int64_t m) {
    std::vector<Rational> c(static_cast<size_t>(m));
    for (auto& x : c)
      x = Rational(static_cast<std::int64_t>(rng() % 11) - 5,
                   1 + static_cast<std::int64_t>(rng() % 3));
    return Cyclotomic(m, c);
  };
  for (int trial = 0; trial < 25; ++trial) {
    Cyclotomic a = random_value(6), b = random_value(6);
    CHECK((a + b).embedded(12) == a.embedded(12) + b.embedded(12));
    CHECK((a * b).embedded(12) == a.embedded(12) * b.embedded(12));
  }
}

TEST_CASE("equality across orders") {
  CHECK(Cyclotomic::zeta(8, 2) == Cyclotomic::zeta(4, 1));
  CHECK(Cyclotomic::zeta(6, 3) == Cyclotomic(Rational(-1)));
  CHECK(Cyclotomic::zeta(12, 0) == Cyclotomic(Rational(1)));
}

TEST_CASE("rational helpers") {
  Rational r(6, 4);
  CHECK(numerator(r) == 3);
  CHECK(denominator(r) == 2);
  CHECK(rational_to_string(r) == "3/2");
  CHECK(rational_from_string("3/2") == r);
  CHECK(rational_from_string("-7") == Rational(-7));
  CHECK(is_p_power(BigInt(81), BigInt(3)));
  CHECK(!is_p_power(BigInt(12), BigInt(3)));
  CHECK(p_adic_valuation(BigInt(54), BigInt(3)) == 3);
}
