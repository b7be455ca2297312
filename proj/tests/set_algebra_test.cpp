#include <doctest.h>

#include "pea/pea.hpp"
#include "util.hpp"

using namespace pea;
using pea::test::elem_of;
using pea::test::naive_closure;
using pea::test::oracle_cyl;

TEST_SUITE("set-algebra") {
  TEST_CASE("unit sizes") {
    CHECK(SetAlgebra({2, 2}).one().count() == 4);
    CHECK(SetAlgebra({4, 5}).one().count() == 625);
    SetAlgebra tiny({1, 1});
    CHECK(tiny.one().count() == 1);
    CHECK(tiny.one() == ~tiny.zero());
  }

  TEST_CASE("cyl on the empty coordinate set is the identity") {
    SetAlgebra alg({3, 2});
    Rng rng(11);
    for (int k = 0; k < 20; ++k) {
      Elem x = sample_bits(alg, rng);
      CHECK(alg.cyl({}, x) == x);
    }
  }

  TEST_CASE("cyl single example at alpha=2") {
    SetAlgebra alg({2, 2});
    Elem x = elem_of(alg, {{0, 1}});
    CHECK(alg.cyl({0}, x) == elem_of(alg, {{0, 1}, {1, 1}}));
  }

  TEST_CASE("cyl of zero is zero for every Gamma") {
    SetAlgebra alg({3, 3});
    for (const auto& g : alg.all_gammas()) CHECK(alg.cyl(g, alg.zero()) == alg.zero());
  }

  TEST_CASE("cyl matches the definitional oracle") {
    for (auto cfg : {AlgebraConfig{2, 2}, AlgebraConfig{3, 2}, AlgebraConfig{2, 3}}) {
      SetAlgebra alg(cfg);
      Rng rng(5);
      for (int k = 0; k < 10; ++k) {
        Elem x = sample_bits(alg, rng);
        for (const auto& g : alg.all_gammas())
          CHECK(alg.cyl(g, x) == oracle_cyl(alg, g, x));
      }
    }
  }

  TEST_CASE("cyl is monotone and increasing") {
    SetAlgebra alg({3, 2});
    Rng rng(3);
    for (int k = 0; k < 20; ++k) {
      Elem x = sample_bits(alg, rng);
      Elem y = x | sample_bits(alg, rng);
      for (const auto& g : alg.all_gammas()) {
        CHECK(x <= alg.cyl(g, x));
        CHECK(alg.cyl(g, x) <= alg.cyl(g, y));
      }
    }
  }

  TEST_CASE("subst examples at alpha=2") {
    SetAlgebra alg({2, 2});
    Transformation tau({1, 1});  // both coordinates read coordinate 1
    CHECK(alg.subst(tau, elem_of(alg, {{0, 1}})) == alg.zero());
    CHECK(alg.subst(tau, elem_of(alg, {{1, 1}})) ==
          elem_of(alg, {{0, 1}, {1, 1}}));
    Rng rng(9);
    for (int k = 0; k < 20; ++k) {
      Elem x = sample_bits(alg, rng);
      CHECK(alg.subst(Transformation::identity(2), x) == x);
    }
  }

  TEST_CASE("subst lands inside cyl of the support") {
    for (auto cfg : {AlgebraConfig{3, 2}, AlgebraConfig{3, 3}}) {
      SetAlgebra alg(cfg);
      Rng rng(13);
      for (int k = 0; k < 50; ++k) {
        auto tau = sample_transformation(alg.alpha(), rng);
        Elem x = sample_bits(alg, rng);
        CHECK(alg.subst(tau, x) <= alg.cyl(tau.support(), x));
      }
    }
  }

  TEST_CASE("diagonal examples") {
    SetAlgebra alg2({2, 2});
    CHECK(alg2.diag(EquivRel::identity(2)) == alg2.one());
    CHECK(alg2.diag(EquivRel::full(2)) == elem_of(alg2, {{0, 0}, {1, 1}}));
    CHECK(alg2.diag_pair(0, 1) == elem_of(alg2, {{0, 0}, {1, 1}}));
    CHECK(alg2.diag_pair(0, 0) == alg2.one());

    SetAlgebra alg3({3, 2});
    CHECK(alg3.diag(EquivRel::full(3)) ==
          elem_of(alg3, {{0, 0, 0}, {1, 1, 1}}));

    SetAlgebra alg4({4, 4});
    CHECK(alg4.diag_pair(0, 1).count() == 64);
  }

  TEST_CASE("d_E is the meet of its pair diagonals, exhaustively to alpha=4") {
    for (std::uint32_t alpha : {2u, 3u, 4u}) {
      SetAlgebra alg({alpha, alpha});
      for (const auto& e : alg.all_equiv_rels()) {
        Elem meet = alg.one();
        for (auto [i, j] : e.related_pairs()) meet = meet & alg.diag_pair(i, j);
        CHECK(alg.diag(e) == meet);
      }
    }
  }

  TEST_CASE("replacement equals its two routes") {
    SetAlgebra alg({2, 2});
    CHECK(alg.replacement(0, 1, alg.one()) == alg.one());
    CHECK(alg.replacement(0, 1, elem_of(alg, {{1, 1}})) ==
          elem_of(alg, {{0, 1}, {1, 1}}));
    CHECK_THROWS_AS(alg.replacement(1, 1, alg.one()), Error);

    for (auto cfg : {AlgebraConfig{2, 2}, AlgebraConfig{3, 3}}) {
      SetAlgebra a(cfg);
      Rng rng(17);
      for (int k = 0; k < 40; ++k) {
        Elem x = sample_bits(a, rng);
        for (std::uint32_t i = 0; i < a.alpha(); ++i)
          for (std::uint32_t j = 0; j < a.alpha(); ++j) {
            if (i == j) continue;
            Elem rep = a.replacement(i, j, x);
            CHECK((x & a.diag_pair(i, j)) <= rep);
            CHECK(rep == a.cyl({i}, a.diag_pair(i, j) & x));
          }
      }
    }
  }

  TEST_CASE("cyl absorbs unions of coordinate sets") {
    SetAlgebra alg({3, 2});
    Rng rng(23);
    for (int k = 0; k < 10; ++k) {
      Elem x = sample_bits(alg, rng);
      for (const auto& g : alg.all_gammas())
        for (const auto& d : alg.all_gammas()) {
          auto u = g;
          u.insert(u.end(), d.begin(), d.end());
          CHECK(alg.cyl(g, alg.cyl(d, x)) == alg.cyl(u, x));
        }
    }
  }
}

TEST_SUITE("generated-subalgebra") {
  TEST_CASE("degenerate spaces give the two-element algebra") {
    SetAlgebra alg({1, 1});
    auto fam = alg.generated_subalgebra({});
    REQUIRE(fam.size() == 2);
    CHECK(fam[0] == alg.zero());
    CHECK(fam[1] == alg.one());
    CHECK(alg.generated_subalgebra({alg.one()}) == fam);
  }

  TEST_CASE("the unit adds nothing as a generator") {
    SetAlgebra alg({2, 2});
    CHECK(alg.generated_subalgebra({alg.one()}) == alg.generated_subalgebra({}));
    CHECK(alg.generated_subalgebra({alg.zero()}) == alg.generated_subalgebra({}));
  }

  TEST_CASE("matches the naive worklist closure on small spaces") {
    SetAlgebra alg({2, 2});
    Rng rng(29);
    for (int k = 0; k < 6; ++k) {
      std::vector<Elem> gens;
      for (std::uint64_t n = rng.below(3); n-- > 0;) gens.push_back(sample_bits(alg, rng));
      CHECK(alg.generated_subalgebra(gens) == naive_closure(alg, gens));
    }
    CHECK(alg.generated_subalgebra({alg.diag_pair(0, 1)}) ==
          naive_closure(alg, {alg.diag_pair(0, 1)}));

    SetAlgebra wide({2, 3});
    for (int k = 0; k < 3; ++k) {
      std::vector<Elem> gens{sample_bits(wide, rng)};
      CHECK(wide.generated_subalgebra(gens) == naive_closure(wide, gens));
    }
  }

  TEST_CASE("closure cap is an explicit error") {
    AlgebraConfig cfg{2, 3};
    cfg.closure_cap = 8;
    SetAlgebra alg(cfg);
    // two rank singletons force at least five cells, hence 32 > 8 members
    CHECK_THROWS_AS(
        alg.generated_subalgebra({alg.from_ranks({0}), alg.from_ranks({1})}),
        CapExceededError);
  }

  TEST_CASE("closure of the identity atom stays inside the kernel-atom algebra") {
    PartitionAlgebra palg(4);
    for (std::uint32_t base : {4u, 5u}) {
      SetAlgebra alg({4, base});
      Elem xid = atom_concrete(Partition::identity(4), alg);
      auto fam = alg.generated_subalgebra({xid});
      AtomTable table(palg, alg);
      CHECK(fam.size() == 1ull << palg.num_partitions());
      std::size_t in_c = 0;
      for (const auto& u : fam) in_c += table.membership(u).has_value();
      CHECK(in_c == fam.size());
    }
    // the two membership routes agree
    SetAlgebra alg({4, 4});
    AtomTable table(palg, alg);
    Rng rng(37);
    for (int k = 0; k < 10; ++k) {
      Elem x = sample_bits(alg, rng);
      auto a = table.membership(x);
      auto b = palg.membership(x, alg);
      CHECK(a.has_value() == b.has_value());
      if (a && b) CHECK(*a == *b);
    }
  }
}
