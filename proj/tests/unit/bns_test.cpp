#include <gtest/gtest.h>

#include <random>

#include "sqhnn/bns.hpp"
#include "sqhnn/errors.hpp"
#include "support.hpp"

namespace sqhnn {
namespace {

using testing::pres;

TEST(Walk, Examples) {
  const Alphabet at = at_alphabet();
  const RelatorWalk torus = walk(testing::w("t a t^-1 a^-1", at));
  EXPECT_EQ(torus.points, (std::vector<Point>{{0, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 0}}));
  EXPECT_TRUE(torus.closed());

  const RelatorWalk bs = walk(testing::w("t a t^-1 a^-2", at));
  EXPECT_EQ(bs.points.back(), (Point{-1, 0}));
  EXPECT_FALSE(bs.closed());

  const RelatorWalk r8 = walk(expand_to_at(build_r_l(8)));
  EXPECT_EQ(r8.points.size(), 117u);
  EXPECT_TRUE(r8.closed());
  for (std::size_t k = 0; k + 1 < r8.points.size(); ++k) {
    const auto dx = r8.points[k + 1].first - r8.points[k].first;
    const auto dy = r8.points[k + 1].second - r8.points[k].second;
    EXPECT_EQ(std::abs(dx) + std::abs(dy), 1);
  }
  EXPECT_THROW(walk(testing::w("c", Alphabet{"a", "t", "c"})), PreconditionError);
}

TEST(Hull, Examples) {
  const Alphabet at = at_alphabet();
  const HullData sq = hull(walk(testing::w("t a t^-1 a^-1", at)));
  EXPECT_EQ(sq.vertices.size(), 4u);
  EXPECT_EQ(sq.visits, (std::vector<std::size_t>{1, 1, 1, 1}));

  const HullData seg = hull(walk(testing::w("a^2", at)));
  EXPECT_EQ(seg.vertices, (std::vector<Point>{{0, 0}, {2, 0}}));

  const HullData r8 = hull(walk(expand_to_at(build_r_l(8))));
  ASSERT_FALSE(r8.vertices.empty());
  for (std::size_t v : r8.visits) EXPECT_EQ(v, 1u);
}

TEST(Hull, ContainsEveryWalkPoint) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 200; ++trial) {
    const RelatorWalk w = walk(testing::cyclic_word(rng, 2, 3 + trial % 20));
    const HullData h = hull(w);
    const std::size_t m = h.vertices.size();
    if (m < 3) continue;
    for (const Point& p : w.points) {
      for (std::size_t k = 0; k < m; ++k) {
        const Point& a = h.vertices[k];
        const Point& b = h.vertices[(k + 1) % m];
        const long long cross =
            (b.first - a.first) * (p.second - a.second) - (b.second - a.second) * (p.first - a.first);
        EXPECT_GE(cross, 0);
      }
    }
  }
}

TEST(Brown, BaumslagSolitarCalibration) {
  const Presentation bs = pres("< a, t | t a t^-1 a^-2 >");
  const BnsClassification down = brown_classify(bs, Character{0, -1});
  EXPECT_EQ(down.pair_verdict, PairVerdict::kStrictlyAscending);
  EXPECT_TRUE(down.chi_in_sigma);
  EXPECT_FALSE(down.minus_chi_in_sigma);
  const BnsClassification up = brown_classify(bs, Character{0, 1});
  EXPECT_EQ(up.pair_verdict, PairVerdict::kStrictlyAscending);
  EXPECT_FALSE(up.chi_in_sigma);
  EXPECT_TRUE(up.minus_chi_in_sigma);

  const auto rays = sweep(bs, 4);
  EXPECT_EQ(rays.size(), 2u);
}

TEST(Brown, FlagshipRays) {
  const Presentation g = r_l_presentation(8);
  EXPECT_EQ(brown_classify(g, Character{-1, -1}).pair_verdict, PairVerdict::kStrictlyAscending);
  EXPECT_EQ(brown_classify(g, Character{1, -1}).pair_verdict, PairVerdict::kStrictlyAscending);
  EXPECT_EQ(brown_classify(g, Character{2, 1}).pair_verdict, PairVerdict::kFibered);
  for (const auto& c : {Character{1, 0}, Character{0, 1}}) {
    EXPECT_NE(brown_classify(g, c).pair_verdict, PairVerdict::kFibered);
  }
}

TEST(Brown, TorusIsAlwaysFibered) {
  for (const auto& r : sweep(pres("< a, t | t a t^-1 a^-1 >"), 3)) {
    EXPECT_EQ(r.pair_verdict, PairVerdict::kFibered);
  }
}

TEST(Brown, Preconditions) {
  EXPECT_THROW(brown_classify(pres("< a, t | t a t^-1 a^-2 >"), Character{1, 0}), PreconditionError);
  EXPECT_THROW(brown_classify(pres("< a, t, b | t a >"), Character{1, -1}), PreconditionError);
  EXPECT_THROW(brown_classify(pres("< a, t | t a, a >"), Character{1, -1}), PreconditionError);
  EXPECT_THROW(Character::primitive(0, 0), PreconditionError);
  EXPECT_EQ(Character::primitive(4, -6), (Character{2, -3}));
}

TEST(Brown, DependsOnlyOnRayPair) {
  std::mt19937_64 rng(82);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Word r = testing::cyclic_word(rng, 2, 4 + trial % 16);
    const long long ea = exponent_sum(r, 0), et = exponent_sum(r, 1);
    if (ea == 0 && et == 0) continue;
    const Character chi = Character::primitive(-et, ea);
    const Presentation p(at_alphabet(), {r});
    const BnsClassification c = brown_classify(p, chi);
    const BnsClassification m = brown_classify(p, -chi);
    const BnsClassification scaled = brown_classify(p, Character{3 * chi.first, 3 * chi.second});
    EXPECT_EQ(c.pair_verdict, m.pair_verdict);
    EXPECT_EQ(c.chi_in_sigma, m.minus_chi_in_sigma);
    EXPECT_EQ(c.pair_verdict, scaled.pair_verdict);
    EXPECT_EQ(c.chi_in_sigma, scaled.chi_in_sigma);
    EXPECT_EQ(c.pair_verdict == PairVerdict::kFibered, c.chi_in_sigma && c.minus_chi_in_sigma);
    EXPECT_EQ(c.pair_verdict == PairVerdict::kStrictlyAscending,
              c.chi_in_sigma != c.minus_chi_in_sigma);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Brown, ClosedWalkIffBettiTwo) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 200; ++trial) {
    const Word r = testing::cyclic_word(rng, 2, 2 + trial % 10);
    const Presentation p(at_alphabet(), {r});
    EXPECT_EQ(walk(r).closed(), abelianization(p).betti == 2);
  }
}

}  // namespace
}  // namespace sqhnn
