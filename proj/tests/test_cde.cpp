#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "modrep/cde.hpp"

using namespace modrep;

namespace {

FiniteGroup make_s3() {
  return generate_group({ResidueMatrix::from_rows(3, {{1, 1}, {0, 1}}),
                         ResidueMatrix::from_rows(3, {{2, 0}, {0, 1}})});
}

FiniteGroup make_c2() {
  return generate_group({ResidueMatrix::from_rows(3, {{2, 0}, {0, 1}})});
}

struct Pipeline {
  std::shared_ptr<FiniteGroup> group;
  CharacterTable ct;
  BrauerCharacterTable bt;
  DecompositionMatrix d;
  CartanMatrix c;
};

Pipeline run(std::shared_ptr<FiniteGroup> g, std::int64_t p, int e) {
  Pipeline pipe;
  pipe.group = std::move(g);
  pipe.ct = dixon_character_table(*pipe.group);
  pipe.bt = brauer_character_table(*pipe.group, make_field(p, e), 0);
  pipe.d = decomposition_matrix(pipe.ct, pipe.bt);
  pipe.c = cartan_matrix(pipe.d, p);
  return pipe;
}

}  // namespace

TEST_CASE("p not dividing |G| gives a permutation D and identity C") {
  auto pipe = run(std::make_shared<FiniteGroup>(make_c2()), 3, 2);
  REQUIRE(pipe.d.d.rows == 2);
  REQUIRE(pipe.d.d.cols == 2);
  // permutation matrix: one 1 per row and column
  for (size_t i = 0; i < 2; ++i) {
    BigInt row_sum(0), col_sum(0);
    for (size_t j = 0; j < 2; ++j) {
      row_sum += pipe.d.d.at(i, j);
      col_sum += pipe.d.d.at(j, i);
      CHECK(pipe.d.d.at(i, j) >= 0);
      CHECK(pipe.d.d.at(i, j) <= 1);
    }
    CHECK(row_sum == 1);
    CHECK(col_sum == 1);
  }
  CHECK(pipe.c.c == IntMatrix::identity(2));

  // every irreducible its own block
  BlockPartition blocks = block_partition(pipe.d);
  CHECK(blocks.block_count == 2);
}

TEST_CASE("S3 at p=3: D and C") {
  auto pipe = run(std::make_shared<FiniteGroup>(make_s3()), 3, 2);
  REQUIRE(pipe.d.d.rows == 3);
  REQUIRE(pipe.d.d.cols == 2);
  // rows of D, up to the canonical ordering: two unit rows and one (1,1)
  std::multiset<std::pair<std::int64_t, std::int64_t>> rows;
  for (size_t i = 0; i < 3; ++i)
    rows.insert({static_cast<std::int64_t>(pipe.d.d.at(i, 0)),
                 static_cast<std::int64_t>(pipe.d.d.at(i, 1))});
  CHECK(rows == std::multiset<std::pair<std::int64_t, std::int64_t>>{
                    {1, 0}, {0, 1}, {1, 1}});
  CHECK(pipe.c.c == IntMatrix::from_rows({{2, 1}, {1, 2}}));

  // the linking graph is connected: a single block
  BlockPartition blocks = block_partition(pipe.d);
  CHECK(blocks.block_count == 1);
}

TEST_CASE("SL2(Z/3) at p=3 over GF(9): C = diag(3,1,3) up to permutation") {
  auto pipe = run(std::make_shared<FiniteGroup>(sl2_over(3, 1)), 3, 2);
  REQUIRE(pipe.d.d.rows == 7);
  REQUIRE(pipe.d.d.cols == 3);
  // canonical simple order has dims (1,2,3); the paper's diag(3,1,3) lists
  // the dim-3 simple second
  CHECK(pipe.c.c ==
        IntMatrix::from_rows({{3, 0, 0}, {0, 3, 0}, {0, 0, 1}}));
  CHECK(int_det(pipe.c.c) == 9);

  BlockPartition blocks = block_partition(pipe.d);
  CHECK(blocks.block_count == 3);
}

TEST_CASE("cartan invariants rejected on a broken D") {
  DecompositionMatrix bad{IntMatrix::from_rows({{1, 0}, {0, 0}})};
  // the zero column makes DtD singular, not positive definite
  CHECK_THROWS_AS(cartan_matrix(bad, 3), InvariantViolation);
}

TEST_CASE("apply_d and apply_e") {
  auto pipe = run(std::make_shared<FiniteGroup>(sl2_over(3, 1)), 3, 2);
  const size_t n_ord = pipe.d.d.rows, n_sim = pipe.d.d.cols;

  // trivial ordinary character: find its row (all-ones values, degree 1);
  // its image under d is a single simple with multiplicity 1
  for (size_t i = 0; i < n_ord; ++i) {
    auto v = GrothendieckVector::basis_vector(BasisTag::OrdinaryIrreducibles,
                                              n_ord, i);
    auto dv = apply_d(v, pipe.d);
    CHECK(dv.tag == BasisTag::Simples);
    for (size_t j = 0; j < n_sim; ++j) CHECK(dv.coords[j] == pipe.d.d.at(i, j));
  }

  // the degree-3 ordinary maps to the dim-3 simple with multiplicity 1
  size_t steinberg = 0;
  for (size_t i = 0; i < n_ord; ++i)
    if (pipe.ct.degrees[i] == 3) steinberg = i;
  auto st = apply_d(GrothendieckVector::basis_vector(
                        BasisTag::OrdinaryIrreducibles, n_ord, steinberg),
                    pipe.d);
  CHECK(st.coords == std::vector<BigInt>{BigInt(0), BigInt(0), BigInt(1)});

  // zero maps to zero
  GrothendieckVector zero{BasisTag::OrdinaryIrreducibles,
                          std::vector<BigInt>(n_ord, BigInt(0))};
  auto dz = apply_d(zero, pipe.d);
  for (const auto& c : dz.coords) CHECK(c == 0);

  // e on a projective basis vector gives the column of D
  for (size_t j = 0; j < n_sim; ++j) {
    auto p = GrothendieckVector::basis_vector(
        BasisTag::ProjectiveIndecomposables, n_sim, j);
    auto ep = apply_e(p, pipe.d);
    CHECK(ep.tag == BasisTag::OrdinaryIrreducibles);
    for (size_t i = 0; i < n_ord; ++i) CHECK(ep.coords[i] == pipe.d.d.at(i, j));
  }

  // tags are enforced
  CHECK_THROWS_AS(apply_d(st, pipe.d), TagMismatch);
  CHECK_THROWS_AS(
      apply_e(GrothendieckVector::basis_vector(BasisTag::OrdinaryIrreducibles,
                                               n_ord, 0),
              pipe.d),
      TagMismatch);
}

TEST_CASE("pairing: dual bases and Brauer reciprocity") {
  auto pipe = run(std::make_shared<FiniteGroup>(sl2_over(3, 1)), 3, 2);
  const size_t n_ord = pipe.d.d.rows, n_sim = pipe.d.d.cols;

  for (size_t s = 0; s < n_sim; ++s)
    for (size_t t = 0; t < n_sim; ++t) {
      auto ps = GrothendieckVector::basis_vector(
          BasisTag::ProjectiveIndecomposables, n_sim, s);
      auto st = GrothendieckVector::basis_vector(BasisTag::Simples, n_sim, t);
      CHECK(pairing(ps, st) == (s == t ? 1 : 0));
    }

  // <e(P), chi> = <P, d(chi)> on every basis pair
  for (size_t s = 0; s < n_sim; ++s)
    for (size_t i = 0; i < n_ord; ++i) {
      auto ps = GrothendieckVector::basis_vector(
          BasisTag::ProjectiveIndecomposables, n_sim, s);
      auto chi = GrothendieckVector::basis_vector(
          BasisTag::OrdinaryIrreducibles, n_ord, i);
      CHECK(pairing(apply_e(ps, pipe.d), chi) ==
            pairing(ps, apply_d(chi, pipe.d)));
    }

  // pairing of [kG] = sum dim(S) [P_S] against each simple yields the
  // dimension-weighted Cartan data
  GrothendieckVector kg{BasisTag::ProjectiveIndecomposables,
                        std::vector<BigInt>()};
  for (size_t s = 0; s < n_sim; ++s)
    kg.coords.push_back(BigInt(pipe.bt.dims[s]));
  for (size_t t = 0; t < n_sim; ++t) {
    // <kG, S_t> counts Hom(kG, S_t) = dim S_t... via the Cartan expansion
    BigInt expect(0);
    for (size_t s = 0; s < n_sim; ++s)
      expect += BigInt(pipe.bt.dims[s]) *
                (s == t ? BigInt(1) : BigInt(0));
    auto st = GrothendieckVector::basis_vector(BasisTag::Simples, n_sim, t);
    CHECK(pairing(kg, st) == expect);
  }

  CHECK_THROWS_AS(
      pairing(GrothendieckVector::basis_vector(BasisTag::Simples, n_sim, 0),
              GrothendieckVector::basis_vector(BasisTag::Simples, n_sim, 0)),
      TagMismatch);
}

TEST_CASE("blocks refine the Cartan zero pattern (both levels)") {
  for (int level : {1, 2}) {
    auto pipe = run(std::make_shared<FiniteGroup>(sl2_over(3, level)), 3, 2);
    BlockPartition blocks = block_partition(pipe.d);
    for (size_t i = 0; i < pipe.c.c.rows; ++i)
      for (size_t j = 0; j < pipe.c.c.cols; ++j)
        if (blocks.simple_block[i] != blocks.simple_block[j])
          CHECK(pipe.c.c.at(i, j) == 0);
    // each ordinary irreducible's block is the block of every simple it
    // decomposes into
    for (size_t i = 0; i < pipe.d.d.rows; ++i)
      for (size_t j = 0; j < pipe.d.d.cols; ++j)
        if (pipe.d.d.at(i, j) != 0)
          CHECK(blocks.ordinary_block[i] == blocks.simple_block[j]);
  }
}

TEST_CASE("SL2(Z/9) blocks: 2+1 pattern") {
  auto pipe = run(std::make_shared<FiniteGroup>(sl2_over(3, 2)), 3, 2);
  BlockPartition blocks = block_partition(pipe.d);
  CHECK(blocks.block_count == 2);
  // canonical order (dims 1,2,3): the dim-2 simple is alone
  CHECK(blocks.simple_block[0] == blocks.simple_block[2]);
  CHECK(blocks.simple_block[1] != blocks.simple_block[0]);
}

TEST_CASE("block pullback along SL2(Z/9) -> SL2(Z/3)") {
  auto g2 = std::make_shared<FiniteGroup>(sl2_over(3, 2));
  auto g1 = std::make_shared<FiniteGroup>(sl2_over(3, 1));
  auto pipe2 = run(g2, 3, 2);
  auto pipe1 = run(g1, 3, 2);
  QuotientMap alpha = reduction_map(*g2, *g1);

  BlockPartition b2 = block_partition(pipe2.d);
  BlockPartition b1 = block_partition(pipe1.d);

  // the inflation map on the three simples is the identity on labels
  auto inflation = inflate_simples(alpha, pipe2.bt, pipe1.bt);
  CHECK(inflation == std::vector<size_t>{0, 1, 2});

  auto pull = block_pullback(alpha, pipe2.bt, b2, pipe1.bt, b1);
  REQUIRE(pull.size() == static_cast<size_t>(b1.block_count));
  for (size_t s = 0; s < 3; ++s)
    CHECK(pull[static_cast<size_t>(b1.simple_block[s])] ==
          b2.simple_block[inflation[s]]);
}

TEST_CASE("block pullback: identity map and trivial quotient") {
  auto g1 = std::make_shared<FiniteGroup>(sl2_over(3, 1));
  auto pipe1 = run(g1, 3, 2);
  BlockPartition b1 = block_partition(pipe1.d);

  QuotientMap id = reduction_map(*g1, *g1);
  auto pull = block_pullback(id, pipe1.bt, b1, pipe1.bt, b1);
  for (int b = 0; b < b1.block_count; ++b)
    CHECK(pull[static_cast<size_t>(b)] == b);

  // trivial quotient: its unique block lands on the principal block of G
  auto triv = std::make_shared<FiniteGroup>(
      generate_group({ResidueMatrix::identity(3, 2)}));
  auto pipe_t = run(triv, 3, 2);
  BlockPartition bt_blocks = block_partition(pipe_t.d);
  REQUIRE(bt_blocks.block_count == 1);
  QuotientMap to_triv = hom_quotient_map(*g1, *triv,
                                         {triv->identity(), triv->identity()});
  auto pull2 = block_pullback(to_triv, pipe1.bt, b1, pipe_t.bt, bt_blocks);
  REQUIRE(pull2.size() == 1);
  // the principal block: the block of the trivial simple, which is the
  // first canonical simple (dim 1, values all 1)... locate it
  size_t trivial_idx = 0;
  for (size_t s = 0; s < pipe1.bt.rows.size(); ++s) {
    bool all_one = pipe1.bt.dims[s] == 1;
    for (const auto& v : pipe1.bt.rows[s].values)
      all_one = all_one && v == Cyclotomic(Rational(1));
    if (all_one) trivial_idx = s;
  }
  CHECK(pull2[0] == b1.simple_block[trivial_idx]);
}

TEST_CASE("number of simples equals number of p-regular classes") {
  for (int level : {1, 2}) {
    auto pipe = run(std::make_shared<FiniteGroup>(sl2_over(3, level)), 3, 2);
    CHECK(pipe.bt.rows.size() ==
          p_regular_classes(pipe.group->classes(), 3).size());
  }
  auto s3 = run(std::make_shared<FiniteGroup>(make_s3()), 3, 2);
  CHECK(s3.bt.rows.size() == p_regular_classes(s3.group->classes(), 3).size());
}

TEST_CASE("Cartan determinant is a power of p") {
  for (int level : {1, 2}) {
    auto pipe = run(std::make_shared<FiniteGroup>(sl2_over(3, level)), 3, 2);
    CHECK(is_p_power(int_det(pipe.c.c), BigInt(3)));
  }
}
