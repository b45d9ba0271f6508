#include <gtest/gtest.h>

#include <random>
#include <set>

#include "braidslice/errors.hpp"
#include "braidslice/symmetry.hpp"
#include "braidslice/unfolding.hpp"
#include "oracles.hpp"

namespace braidslice {
namespace {

RatVec vec(std::initializer_list<Rat> xs) { return RatVec(xs); }

ObjectConfig example_config() { return ObjectConfig::from_points({{Rat(-3)}, {Rat(1)}, {Rat(2)}}); }

std::set<std::string> names(const std::vector<Ranking>& rs) {
  std::set<std::string> out;
  for (const Ranking& r : rs) out.insert(r.str());
  return out;
}

using oracle::positively_proportional;
using oracle::random_generic_config;
using oracle::random_point;

TEST(BuildWu, ExampleNormalization) {
  const ObjectConfig cfg = example_config();
  const WU wu = build_Wu(cfg);
  EXPECT_EQ(wu.u, vec({Rat(-13, 6), Rat(11, 6), Rat(1, 3)}));
  EXPECT_EQ(normalized_u(cfg), vec({Rat(-13, 28), Rat(11, 28), Rat(2, 28)}));
  Rat col;
  Rat total;
  for (std::size_t j = 0; j < 3; ++j) {
    col += wu.W(j, 0);
    total += wu.u[j];
  }
  EXPECT_TRUE(col.is_zero());
  EXPECT_TRUE(total.is_zero());
}

TEST(Direction, ExampleDirectionAndPattern) {
  const ObjectConfig cfg = example_config();
  const DirectionResult d = direction(cfg);
  EXPECT_TRUE(positively_proportional(d.v_unnormalized, vec({Rat(-1), Rat(5), Rat(-4)})));
  EXPECT_TRUE(dot(d.W.column(0), d.v_unnormalized).is_zero());

  // Under the unit normalization the projection is (5/98)(-1, 5, -4).
  RatMat basis(3, 2);
  for (std::size_t j = 0; j < 3; ++j) {
    basis(j, 0) = 1;
    basis(j, 1) = d.W(j, 0);
  }
  EXPECT_EQ(*project_out(normalized_u(cfg), basis), vec({Rat(-5, 98), Rat(25, 98), Rat(-20, 98)}));

  const RankingPattern rp = ranking_pattern_uf(cfg);
  EXPECT_EQ(names(rp.excluded()), (std::set<std::string>{"(132)", "(312)"}));
  EXPECT_EQ(names(rp.admissible()), (std::set<std::string>{"(123)", "(213)", "(231)", "(321)"}));
}

TEST(Direction, Errors) {
  EXPECT_THROW(direction(ObjectConfig::from_points({{Rat(1)}, {Rat(1)}, {Rat(1)}})), SingularNormalEquations);
  // Four concyclic points lift to coplanar points.
  const auto circle = ObjectConfig::from_points({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}});
  EXPECT_THROW(direction(circle), ZeroDirection);
  EXPECT_FALSE(check_genericity(circle).a2_holds);
  EXPECT_THROW(ObjectConfig::from_points({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}), FullDimensionalConfig);
  EXPECT_THROW(ObjectConfig::from_points({{Rat(0)}, {Rat(1)}, {Rat(2)}, {Rat(4)}}), DimensionMismatch);
  EXPECT_THROW(ObjectConfig::from_points({{Rat(0)}, {Rat(1), Rat(2)}, {Rat(2)}}), DimensionMismatch);
}

TEST(Genericity, ForestIndependence) {
  const std::vector<RatVec> nu{{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
  const ForestCheck check = check_forest_independence(nu, 2);
  EXPECT_FALSE(check.holds);
  EXPECT_EQ(check.violation, "{1,2},{3,4}");

  const GenericityReport ex = check_genericity(example_config());
  EXPECT_TRUE(ex.a1_holds);
  EXPECT_TRUE(ex.a2_holds);
  EXPECT_FALSE(ex.first_violation.has_value());

  const GenericityReport same = check_genericity(ObjectConfig::from_points({{Rat(1)}, {Rat(1)}, {Rat(2)}}));
  EXPECT_FALSE(same.a1_holds);
  ASSERT_TRUE(same.first_violation.has_value());
}

// Three distinct points on a line never lift to collinear points on the parabola.
TEST(Genericity, DistinctPointsOnALineSatisfyA2) {
  for (int a = -3; a <= 3; ++a) {
    for (int b = a + 1; b <= 3; ++b) {
      for (int c = b + 1; c <= 3; ++c) {
        const auto cfg = ObjectConfig::from_points({{Rat(a)}, {Rat(b)}, {Rat(c)}});
        const auto report = check_genericity(cfg);
        ASSERT_TRUE(report.a1_holds);
        ASSERT_TRUE(report.a2_holds);
      }
    }
  }
}

TEST(ObjectFile, ParsesCommentsAndDecimals) {
  const ObjectConfig cfg = parse_object_config("# objects on a line\n-0.3\n0.1   # second\n\n1/5\n");
  EXPECT_EQ(cfg.m(), 3);
  EXPECT_TRUE(positively_proportional(direction(cfg).v_unnormalized, vec({Rat(-1), Rat(5), Rat(-4)})));
  EXPECT_THROW(parse_object_config("1\nx\n2\n"), ParseError);
  EXPECT_THROW(parse_object_config("1,2\n3,4\n5,6\n"), FullDimensionalConfig);
}

TEST(WitnessIdealPoint, ExampleRankings) {
  const ObjectConfig cfg = example_config();
  const auto y = witness_ideal_point(cfg, Ranking::parse("(213)"));
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(ranking_at(cfg, *y), Ranking::parse("(213)"));
  EXPECT_FALSE(witness_ideal_point(cfg, Ranking::parse("(132)")).has_value());
  EXPECT_FALSE(witness_ideal_point(cfg, Ranking::parse("(312)")).has_value());
  // Strictness: an object's own location ties nothing but is never needed.
  for (const Ranking& r : all_rankings(3)) {
    const auto w = witness_ideal_point(cfg, r);
    if (w) EXPECT_NE(ranking_at(cfg, *w), std::nullopt);
  }
}

TEST(RankingPatternUf, InvariantUnderSimilarities) {
  std::mt19937_64 rng(61);
  for (int m = 4; m <= 5; ++m) {
    for (int trial = 0; trial < 15; ++trial) {
      const ObjectConfig cfg = random_generic_config(m, rng);
      const RankingPattern rp = ranking_pattern_uf(cfg);
      ASSERT_EQ(ranking_pattern_uf(cfg.translated(random_point(cfg.n(), rng))), rp);
      Rat a = oracle::random_rat(rng, 5, 4);
      if (a.is_zero()) a = Rat(-3, 2);
      ASSERT_EQ(ranking_pattern_uf(cfg.scaled(a)), rp);
      ASSERT_EQ(ranking_pattern_uf(cfg.scaled(-a)), rp);
      const auto sigma = oracle::random_permutation(m, rng);
      ASSERT_EQ(ranking_pattern_uf(cfg.permuted(sigma)), rp.relabeled(sigma));
      ASSERT_TRUE(positively_proportional(direction(cfg.permuted(sigma)).v_unnormalized,
                                          permute_vector(direction(cfg).v_unnormalized, sigma)));
    }
  }
}

TEST(WitnessIdealPoint, RoundTripAndSampling) {
  std::mt19937_64 rng(62);
  for (int m = 4; m <= 5; ++m) {
    for (int trial = 0; trial < 4; ++trial) {
      const ObjectConfig cfg = random_generic_config(m, rng);
      const RankingPattern rp = ranking_pattern_uf(cfg);
      for (const Ranking& r : all_rankings(m)) {
        const auto y = witness_ideal_point(cfg, r);
        ASSERT_EQ(y.has_value(), rp.admits(r)) << r.str();
        if (y) ASSERT_EQ(ranking_at(cfg, *y), r);
      }
      for (int s = 0; s < 1000; ++s) {
        const auto r = ranking_at(cfg, random_point(cfg.n(), rng));
        if (r) ASSERT_TRUE(rp.admits(*r)) << r->str();
      }
    }
  }
}

TEST(ConfigFromDirection, RealizesDirection) {
  std::mt19937_64 rng(63);
  for (int m = 3; m <= 6; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      const RatVec v = oracle::random_generic_direction(m, rng);
      const auto cfg = config_from_direction(v);
      if (classify_realizability(v) == RealizabilityClass::kV1NotRealizable) {
        ASSERT_FALSE(cfg.has_value());
        continue;
      }
      ASSERT_TRUE(cfg.has_value());
      ASSERT_TRUE(positively_proportional(direction(*cfg).v_unnormalized, v));
      ASSERT_EQ(ranking_pattern_uf(*cfg), ranking_pattern(v));
    }
  }
}

TEST(ConfigFromDirection, FourObjectPattern) {
  const auto cfg = config_from_direction(vec({Rat(2), Rat(2), Rat(-1), Rat(-3)}));
  ASSERT_TRUE(cfg.has_value());
  EXPECT_EQ(names(ranking_pattern_uf(*cfg).excluded()),
            (std::set<std::string>{"(3412)", "(3421)", "(4312)", "(4321)", "(4132)", "(4231)"}));
}

}  // namespace
}  // namespace braidslice
