#include <gtest/gtest.h>

#include <random>

#include "sqhnn/errors.hpp"
#include "support.hpp"

namespace sqhnn {
namespace {

using testing::ab;
using testing::pres;

TEST(ParseWord, ExponentsAndIdentity) {
  const Word x = parse_word("a^3 b^-2 e a", ab());
  EXPECT_EQ(x.size(), 6u);
  EXPECT_EQ(format_word(x, ab()), "a^3 b^-2 a");
  EXPECT_EQ(format_word(Word{}, ab()), "e");
  EXPECT_TRUE(parse_word("e", ab()).empty());
  EXPECT_TRUE(parse_word("", ab()).empty());
}

TEST(ParseWord, ErrorPositions) {
  try {
    parse_word("a b c", ab());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  try {
    parse_word("a^0", ab());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 0u);
  }
  EXPECT_THROW(parse_word("a^", ab()), ParseError);
  EXPECT_THROW(parse_word("a ^x", ab()), ParseError);
  EXPECT_THROW(parse_word("a $", ab()), ParseError);
}

TEST(ParseWord, RoundTrip) {
  std::mt19937_64 rng(21);
  const Alphabet alpha{"a", "b", "u_1", "a_10"};
  for (int trial = 0; trial < 300; ++trial) {
    const Word x = reduce(testing::raw_letters(rng, 4, trial % 30));
    EXPECT_EQ(parse_word(format_word(x, alpha), alpha), x);
  }
}

TEST(ParsePresentation, Examples) {
  const Presentation bs = pres("< a, t | t a t^-1 a^-2 >");
  EXPECT_EQ(bs.rank(), 2u);
  ASSERT_EQ(bs.relator_count(), 1u);
  EXPECT_EQ(bs.relator(0).size(), 5u);

  const Presentation free = pres("< a, b | >");
  EXPECT_EQ(free.rank(), 2u);
  EXPECT_EQ(free.relator_count(), 0u);

  const Presentation thm = pres("< t,a,b | t a t^-1 = a b^-1 a^2 b, t b t^-1 = b a^-1 b^2 a >");
  EXPECT_EQ(thm.rank(), 3u);
  ASSERT_EQ(thm.relator_count(), 2u);
  EXPECT_EQ(thm.relator(0).size(), 8u);
  EXPECT_EQ(thm.relator(1).size(), 8u);
  EXPECT_EQ(thm, mapping_torus(testing::phi()));
}

TEST(ParsePresentation, Errors) {
  EXPECT_THROW(pres("a, b | a"), ParseError);
  EXPECT_THROW(pres("< a, a | a >"), ParseError);
  EXPECT_THROW(pres("< a, e | a >"), ParseError);
  EXPECT_THROW(pres("< a, b | c >"), ParseError);
  EXPECT_THROW(pres("< a, b | a > trailing"), ParseError);
  EXPECT_THROW(pres("< a, b | a a^-1 >"), ParseError);
}

TEST(ParsePresentation, RoundTrip) {
  for (const Presentation& p :
       {pres("< a, t | t a t^-1 a^-2 >"), pres("< a, b | >"), r_l_presentation(8),
        mapping_torus(testing::sapir())}) {
    EXPECT_EQ(parse_presentation(format_presentation(p)), p);
  }
}

TEST(ParseEndomorphism, ExamplesAndErrors) {
  const Endomorphism f = testing::phi();
  EXPECT_EQ(f.rank(), 2u);
  EXPECT_EQ(parse_endomorphism(format_endomorphism(f)), f);
  EXPECT_THROW(parse_endomorphism(""), ParseError);
  EXPECT_THROW(parse_endomorphism("a -> a, a -> b"), ParseError);
  EXPECT_THROW(parse_endomorphism("a a b"), ParseError);
  try {
    parse_endomorphism("a -> a b, b -> b q");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 17u);
  }
}

}  // namespace
}  // namespace sqhnn
