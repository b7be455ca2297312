#include <doctest.h>

#include "pea/pea.hpp"

using namespace pea;

TEST_SUITE("sequence") {
  TEST_CASE("rank encoding round-trips over the whole space") {
    for (auto [a, b] : {std::pair<std::uint32_t, std::uint32_t>{1, 1},
                        {2, 2},
                        {3, 2},
                        {2, 3},
                        {4, 5}}) {
      AlgebraConfig cfg{a, b};
      for (std::uint64_t r = 0; r < cfg.points(); ++r)
        CHECK(rank_of(cfg, sequence_of(cfg, r)) == r);
    }
  }

  TEST_CASE("coordinate 0 is most significant") {
    AlgebraConfig cfg{2, 2};
    CHECK(rank_of(cfg, Sequence{{0, 1}}) == 1);
    CHECK(rank_of(cfg, Sequence{{1, 0}}) == 2);
  }

  TEST_CASE("out-of-range values are rejected") {
    AlgebraConfig cfg{2, 2};
    CHECK_THROWS_AS(rank_of(cfg, Sequence{{0, 2}}), Error);
    CHECK_THROWS_AS(sequence_of(cfg, 4), Error);
  }
}

TEST_SUITE("transformation") {
  TEST_CASE("support is derived from the map") {
    auto id = Transformation::identity(4);
    CHECK(id.support().empty());
    CHECK(id.is_identity());
    auto r = Transformation::replacement(4, 0, 1);
    CHECK(r.support() == std::vector<std::uint32_t>{0});
    CHECK_FALSE(r.is_permutation());
  }

  TEST_CASE("composition order matches s_{sigma o tau} = s_sigma o s_tau") {
    // tau first, then sigma
    Transformation tau({1, 1, 2});
    Transformation sigma({2, 0, 0});
    auto c = compose(sigma, tau);
    CHECK(c(0) == sigma(tau(0)));
    CHECK(c(1) == 0);
    CHECK(c(2) == 0);
  }

  TEST_CASE("preimage and injectivity") {
    Transformation tau({1, 1, 2});
    CHECK(tau.preimage({1}) == std::vector<std::uint32_t>{0, 1});
    CHECK_FALSE(tau.injective_on({0, 1}));
    CHECK(tau.injective_on({0, 2}));
  }
}

TEST_SUITE("equiv") {
  TEST_CASE("pair closure and classes") {
    auto e = EquivRel::from_pairs(4, {{0, 1}, {1, 2}});
    CHECK(e.related(0, 2));
    CHECK_FALSE(e.related(0, 3));
    CHECK(e.num_classes() == 2);
    CHECK(e.classes()[0] == std::vector<std::uint32_t>{0, 1, 2});
  }

  TEST_CASE("reflexive, symmetric, transitive on all triples") {
    for (std::uint32_t alpha : {2u, 3u, 4u}) {
      Rng rng(7);
      for (int k = 0; k < 20; ++k) {
        auto e = sample_equiv(alpha, rng);
        for (std::uint32_t i = 0; i < alpha; ++i) {
          CHECK(e.related(i, i));
          for (std::uint32_t j = 0; j < alpha; ++j) {
            CHECK(e.related(i, j) == e.related(j, i));
            for (std::uint32_t l = 0; l < alpha; ++l)
              if (e.related(i, j) && e.related(j, l)) CHECK(e.related(i, l));
          }
        }
      }
    }
  }

  TEST_CASE("overlapping classes are rejected") {
    CHECK_THROWS_AS(EquivRel::from_classes(3, {{0, 1}, {1, 2}}), Error);
  }

  TEST_CASE("outside restriction keeps off-Gamma pairs only") {
    auto e = EquivRel::full(4);
    auto f = e.outside({0, 1});
    CHECK(f.related(2, 3));
    CHECK_FALSE(f.related(0, 1));
    CHECK_FALSE(f.related(0, 2));
  }
}

TEST_SUITE("config") {
  TEST_CASE("capacity error when base^alpha exceeds the maximum") {
    AlgebraConfig cfg{20, 10};
    CHECK_THROWS_AS(cfg.points(), CapacityError);
    CHECK_THROWS_AS(SetAlgebra{cfg}, CapacityError);
  }

  TEST_CASE("degenerate dimensions are legal") {
    SetAlgebra a11({1, 1});
    CHECK(a11.points() == 1);
    CHECK(a11.one().count() == 1);
    CHECK((~a11.zero()) == a11.one());
    SetAlgebra a13({1, 3});
    CHECK(a13.points() == 3);
    SetAlgebra a31({3, 1});
    CHECK(a31.points() == 1);
  }
}
