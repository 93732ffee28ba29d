#include <gtest/gtest.h>

#include <random>

#include "sqhnn/errors.hpp"
#include "sqhnn/npc.hpp"
#include "sqhnn/squarify.hpp"
#include "support.hpp"

namespace sqhnn {
namespace {

using testing::pres;

RewriteResult rewritten(std::size_t l, const Word& w) {
  RewriteResult rw;
  rw.l = l;
  rw.w = w;
  return rw;
}

// a_l^-1 a_0^-1 x_3 .. x_{n-1} a_0^-1 a_l a_0 x_{n+3} .. x_{2n-1} a_0 with
// the x's uniform over a_1..a_{l-1} and their inverses, rejecting
// cancelling neighbours.
Word random_filling(std::mt19937_64& rng, std::size_t l, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> gen(1, static_cast<std::uint32_t>(l - 1));
  std::bernoulli_distribution neg(0.5);
  auto free_run = [&](std::vector<Letter>& out, std::size_t count) {
    for (std::size_t k = 0; k < count;) {
      const Letter x(gen(rng), neg(rng) ? -1 : 1);
      if (!out.empty() && out.back().cancels(x)) continue;
      out.push_back(x);
      ++k;
    }
  };
  const auto L = static_cast<std::uint32_t>(l);
  std::vector<Letter> out{inv_letter(L), inv_letter(0)};
  free_run(out, n - 3);
  out.push_back(inv_letter(0));
  out.push_back(gen_letter(L));
  out.push_back(gen_letter(0));
  free_run(out, n - 3);
  out.push_back(gen_letter(0));
  return Word::from_reduced(out);
}

bool all_squares(const Presentation& p) {
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (p.relator(i).size() != 4 || !p.relator(i).is_cyclically_reduced()) return false;
  }
  return true;
}

TEST(TemplateSquarify, FlagshipCounts) {
  const RewriteResult rw = t_rewrite(r_l_presentation(8));
  const SquarifiedPresentation sq = template_squarify(rw);
  EXPECT_EQ(sq.presentation.rank(), 18u);
  EXPECT_EQ(sq.presentation.relator_count(), 17u);
  EXPECT_TRUE(all_squares(sq.presentation));
  EXPECT_EQ(sq.substitutions.size(), 8u);
  EXPECT_TRUE(verify_substitutions(sq).ok);
  EXPECT_EQ(sq.presentation.alphabet().name(sq.presentation.rank() - 1), "u_8");
}

TEST(TemplateSquarify, SmallInstance) {
  const SquarifiedPresentation sq = template_squarify(rewritten(2, build_r_l(2)));
  EXPECT_EQ(sq.presentation.rank(), 6u);
  EXPECT_EQ(sq.presentation.relator_count(), 5u);
  EXPECT_TRUE(all_squares(sq.presentation));
  EXPECT_TRUE(npc_check(sq.presentation).pass);
  EXPECT_TRUE(verify_substitutions(sq).ok);
}

TEST(TemplateSquarify, RelatorsFollowTheTemplate) {
  const SquarifiedPresentation sq = template_squarify(rewritten(2, build_r_l(2)));
  const Presentation& p = sq.presentation;
  const Alphabet& names = p.alphabet();
  EXPECT_EQ(format_word(p.relator(0), names), "t a_0 t^-1 a_1^-1");
  EXPECT_EQ(format_word(p.relator(1), names), "t a_1 t^-1 a_2^-1");
  EXPECT_EQ(format_word(p.relator(2), names), "a_0^-1 a_2 a_0 u_1^-1");
  EXPECT_EQ(format_word(p.relator(3), names), "a_1 u_1 a_1^-1 u_2^-1");
  EXPECT_EQ(format_word(p.relator(4), names), "a_2^-1 a_0^-1 u_2 a_0");
}

TEST(TemplateSquarify, TemplateMismatchReportsPosition) {
  const Alphabet a2 = rewrite_alphabet("a", 2);
  const Word bad = testing::w("a_2^-1 a_1 a_1 a_0^-1 a_2 a_0 a_1^-1 a_0", a2);
  try {
    template_squarify(rewritten(2, bad));
    FAIL() << "expected TemplateMismatch";
  } catch (const TemplateMismatch& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  const Word late = testing::w("a_2^-1 a_0^-1 a_1 a_0^-1 a_2 a_0 a_2 a_0", a2);
  try {
    template_squarify(rewritten(2, late));
    FAIL() << "expected TemplateMismatch";
  } catch (const TemplateMismatch& e) {
    EXPECT_EQ(e.position(), 7u);
  }
}

TEST(TemplateSquarify, Preconditions) {
  const Alphabet a2 = rewrite_alphabet("a", 2);
  EXPECT_THROW(template_squarify(rewritten(2, testing::w("a_2^-1 a_0^-1 a_1 a_0^-1 a_2 a_0 a_1", a2))),
               ParityError);
  const Alphabet a1 = rewrite_alphabet("a", 1);
  EXPECT_THROW(template_squarify(rewritten(1, testing::w("a_1^-1 a_0^-1 a_0^-1 a_1", a1))),
               PreconditionError);
}

TEST(TemplateSquarify, RandomFillingsAreNonPositivelyCurved) {
  std::mt19937_64 rng(71);
  const std::size_t ls[] = {2, 4, 6, 8};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t l = ls[trial % 4];
    const std::size_t n = 3 + static_cast<std::size_t>(rng() % (l + 6));
    const Word w = random_filling(rng, l, n);
    const SquarifiedPresentation sq = template_squarify(rewritten(l, w));
    ASSERT_EQ(sq.presentation.rank(), l + n);
    ASSERT_EQ(sq.presentation.relator_count(), l + n - 1);
    ASSERT_TRUE(all_squares(sq.presentation));
    const NpcReport r = npc_check(sq.presentation);
    EXPECT_TRUE(r.pass) << format_word(w, rewrite_alphabet("a", l));
    EXPECT_TRUE(r.consistent);
    EXPECT_TRUE(verify_substitutions(sq).ok);
  }
}

TEST(Verify, DetectsTampering) {
  const SquarifiedPresentation sq = template_squarify(t_rewrite(r_l_presentation(8)));
  for (std::size_t k = 0; k < sq.presentation.relator_count(); ++k) {
    std::vector<Word> rels = sq.presentation.relators();
    std::vector<Letter> letters(rels[k].begin(), rels[k].end());
    letters[1] = letters[1].inverse();
    rels[k] = reduce(letters);
    if (rels[k].empty()) continue;
    SquarifiedPresentation bad = sq;
    bad.presentation = Presentation(sq.presentation.alphabet(), rels);
    const VerifyReport v = verify_substitutions(bad);
    EXPECT_FALSE(v.ok) << "relator " << k;
    EXPECT_FALSE(v.diagnostic.empty());
  }
}

TEST(Squarify, PreservesAbelianization) {
  const Presentation g = r_l_presentation(8);
  const auto sq = template_squarify(t_rewrite(g));
  const auto before = abelianization(g);
  const auto after = abelianization(sq.presentation);
  EXPECT_EQ(before.betti, after.betti);
  EXPECT_EQ(before.torsion, after.torsion);

  const Presentation torus = mapping_torus(testing::phi());
  const auto found = general_squarify_search(torus);
  ASSERT_TRUE(found.result.has_value());
  EXPECT_EQ(abelianization(found.result->presentation).betti, 1u);
  EXPECT_EQ(abelianization(found.result->presentation).torsion, (std::vector<BigInt>{2, 2}));
}

TEST(Search, PhiMappingTorus) {
  const Presentation torus = mapping_torus(testing::phi());
  const SquarifySearch s = general_squarify_search(torus);
  ASSERT_TRUE(s.result.has_value());
  EXPECT_FALSE(s.bound_reached);
  const Presentation& q = s.result->presentation;
  EXPECT_TRUE(all_squares(q));
  EXPECT_EQ(q.rank(), 7u);
  EXPECT_EQ(q.relator_count(), 6u);
  const NpcReport r = npc_check(q);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.consistent);
  EXPECT_TRUE(verify_substitutions(*s.result).ok);

  const SquarifiedPresentation again = replay_schedule(torus, s.result->schedule);
  EXPECT_EQ(again.presentation, q);
  EXPECT_EQ(general_squarify_search(torus).leaves, s.leaves);
}

TEST(Search, LeafBound) {
  const Presentation torus = mapping_torus(testing::phi());
  const SquarifySearch s = general_squarify_search(torus, 5);
  EXPECT_FALSE(s.result.has_value());
  EXPECT_TRUE(s.bound_reached);
  EXPECT_EQ(s.leaves, 5u);
}

TEST(Search, DirectBaumslagSolitarStyleRelator) {
  const Presentation p = pres("< a, t | t^-1 a^-4 t a^4 >");
  const SquarifySearch s = general_squarify_search(p);
  ASSERT_TRUE(s.result.has_value());
  EXPECT_TRUE(npc_check(s.result->presentation).pass);
  EXPECT_TRUE(verify_substitutions(*s.result).ok);
  EXPECT_EQ(s.result->presentation.rank(), 5u);
}

TEST(Search, Preconditions) {
  EXPECT_THROW(general_squarify_search(mapping_torus(testing::sapir())), ParityError);
  EXPECT_THROW(general_squarify_search(pres("< a, b | a b >")), PreconditionError);
}

TEST(Search, ExhaustedSpaceIsNotAnError) {
  // Every cut of a b a b repeats the pair a b, so no schedule is NPC.
  const SquarifySearch s = general_squarify_search(pres("< a, b | a b a b a b >"));
  EXPECT_FALSE(s.result.has_value());
  EXPECT_FALSE(s.bound_reached);
}

TEST(Replay, RejectsMalformedSchedules) {
  const Presentation torus = mapping_torus(testing::phi());
  EXPECT_THROW(replay_schedule(torus, Schedule{{0, 0}}), PreconditionError);
  EXPECT_THROW(replay_schedule(torus, Schedule{{0, 0}, {0}}), PreconditionError);
  EXPECT_THROW(replay_schedule(torus, Schedule{{0, 9}, {0, 0}}), PreconditionError);
}

}  // namespace
}  // namespace sqhnn
