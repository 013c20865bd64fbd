#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "modrep/characters.hpp"
#include "modrep/meataxe.hpp"

using namespace modrep;

namespace {

FiniteGroup make_s3() {
  return generate_group({ResidueMatrix::from_rows(3, {{1, 1}, {0, 1}}),
                         ResidueMatrix::from_rows(3, {{2, 0}, {0, 1}})});
}

FiniteGroup make_c3() {
  return generate_group({ResidueMatrix::from_rows(3, {{1, 1}, {0, 1}})});
}

}  // namespace

TEST_CASE("perm module basics") {
  FiniteGroup triv = generate_group({ResidueMatrix::identity(3, 2)});
  const FiniteField& f3 = make_field(3, 1);
  Representation r = perm_module(triv, {{0}}, f3);
  CHECK(r.dim == 1);

  FiniteGroup c3 = make_c3();
  Representation reg = regular_module(c3, f3);
  CHECK(reg.dim == 3);

  // non-permutation input is rejected
  CHECK_THROWS_AS(perm_module(c3, {{0, 0, 1}}, f3), NotAnAction);
}

TEST_CASE("regular module of C3 over GF(3) chops to three trivials") {
  FiniteGroup c3 = make_c3();
  const FiniteField& f3 = make_field(3, 1);
  ChopResult res = chop(regular_module(c3, f3), 0);
  REQUIRE(res.factors.size() == 1);
  CHECK(res.factors[0].simple.dim == 1);
  CHECK(res.factors[0].multiplicity == 3);
}

TEST_CASE("natural module of SL2(Z/3) over GF(9) is irreducible") {
  FiniteGroup g = sl2_over(3, 1);
  const FiniteField& f9 = make_field(3, 2);
  Representation nat = natural_module(g, f9);
  ChopResult res = chop(nat, 0);
  REQUIRE(res.factors.size() == 1);
  CHECK(res.factors[0].simple.dim == 2);
  CHECK(res.factors[0].multiplicity == 1);
}

TEST_CASE("tensor dimensions and trivial tensor identity") {
  FiniteGroup g = sl2_over(3, 1);
  const FiniteField& f9 = make_field(3, 2);
  Representation nat = natural_module(g, f9);
  Representation triv = trivial_rep(g, f9);
  Representation t = tensor(nat, triv);
  CHECK(t.dim == 2);
  // equal Brauer characters: trivial (x) M is isomorphic to M
  CHECK(brauer_fingerprint(t) == brauer_fingerprint(nat));

  Representation t2 = tensor(nat, tensor(nat, nat));
  CHECK(t2.dim == 8);
}

TEST_CASE("SL2(Z/9) conjugation module: 27 points, chop conserves dimension") {
  FiniteGroup g2 = sl2_over(3, 2);
  FiniteGroup g1 = sl2_over(3, 1);
  QuotientMap q = reduction_map(g2, g1);
  const FiniteField& f9 = make_field(3, 2);
  Representation x = conjugation_perm_module(g2, q.kernel, f9);
  CHECK(x.dim == 27);

  Representation xt = tensor(x, trivial_rep(g2, f9));
  ChopResult res = chop(xt, 0);
  CHECK(res.dimension_weighted_count() == 27);
}

TEST_CASE("chop fingerprints are seed independent") {
  FiniteGroup s3 = make_s3();
  const FiniteField& f9 = make_field(3, 2);
  Representation reg = regular_module(s3, f9);
  std::multiset<std::string> reference;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    ChopResult res = chop(reg, seed);
    std::multiset<std::string> got;
    for (const auto& f : res.factors)
      for (std::int64_t k = 0; k < f.multiplicity; ++k)
        got.insert(f.fingerprint);
    if (seed == 0)
      reference = got;
    else
      CHECK(got == reference);
  }
}

TEST_CASE("hom_dim") {
  FiniteGroup g = sl2_over(3, 1);
  const FiniteField& f9 = make_field(3, 2);
  Representation nat = natural_module(g, f9);
  Representation triv = trivial_rep(g, f9);
  CHECK(hom_dim(nat, nat) == 1);  // absolutely irreducible
  CHECK(hom_dim(triv, nat) == 0);
  CHECK(hom_dim(triv, triv) == 1);
  Representation two = direct_sum(triv, triv);
  CHECK(hom_dim(two, two) == 4);
}

TEST_CASE("emitted simples are absolutely irreducible (GF(9))") {
  const FiniteField& f9 = make_field(3, 2);
  for (int level : {1, 2}) {
    FiniteGroup g = sl2_over(3, level);
    Representation nat = natural_module(g, f9);
    ChopResult res = chop(tensor(nat, nat), 1);
    for (const auto& f : res.factors) CHECK(hom_dim(f.simple, f.simple) == 1);
  }
}

TEST_CASE("tensor is exact on Grothendieck classes") {
  FiniteGroup s3 = make_s3();
  const FiniteField& f9 = make_field(3, 2);
  Representation nat = natural_module(s3, f9);
  Representation triv = trivial_rep(s3, f9);
  Representation sum = direct_sum(nat, triv);

  auto fingerprints = [](const ChopResult& res) {
    std::multiset<std::string> out;
    for (const auto& f : res.factors)
      for (std::int64_t k = 0; k < f.multiplicity; ++k)
        out.insert(f.fingerprint);
    return out;
  };
  auto merged = fingerprints(chop(tensor(nat, nat), 2));
  for (const auto& fp : fingerprints(chop(tensor(nat, triv), 2)))
    merged.insert(fp);
  CHECK(fingerprints(chop(tensor(nat, sum), 2)) == merged);
}

TEST_CASE("zero-dimensional module chops to nothing") {
  FiniteGroup c3 = make_c3();
  const FiniteField& f3 = make_field(3, 1);
  Representation zero;
  zero.group = &c3;
  zero.field = &f3;
  zero.dim = 0;
  for (size_t i = 0; i < c3.generators().size(); ++i)
    zero.action.push_back(Matrix<FFElem>(0, 0, FFElem(f3, 0)));
  ChopResult res = chop(zero, 0);
  CHECK(res.factors.empty());
}
