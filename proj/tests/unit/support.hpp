#pragma once

#include <random>
#include <string>
#include <vector>

#include "sqhnn/presentation.hpp"
#include "sqhnn/text.hpp"
#include "sqhnn/word.hpp"

namespace sqhnn::testing {

inline Alphabet ab() { return Alphabet{"a", "b"}; }
inline Alphabet at() { return Alphabet{"a", "t"}; }

inline Word w(const std::string& text, const Alphabet& alphabet) {
  return parse_word(text, alphabet);
}

inline Presentation pres(const std::string& text) { return parse_presentation(text); }
inline Endomorphism endo(const std::string& text) { return parse_endomorphism(text); }

inline Endomorphism sapir() { return endo("a -> a b, b -> b a"); }
inline Endomorphism phi() { return endo("a -> a b^-1 a^2 b, b -> b a^-1 b^2 a"); }

// Unreduced letter sequence, uniform over all 2*rank letters.
inline std::vector<Letter> raw_letters(std::mt19937_64& rng, std::size_t rank, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(2 * rank - 1));
  std::vector<Letter> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Letter::from_code(pick(rng)));
  return out;
}

// Cyclically reduced word of exactly length n (n >= 1).
inline Word cyclic_word(std::mt19937_64& rng, std::size_t rank, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(2 * rank - 1));
  for (;;) {
    std::vector<Letter> out;
    while (out.size() < n) {
      const Letter x = Letter::from_code(pick(rng));
      if (!out.empty() && out.back().cancels(x)) continue;
      out.push_back(x);
    }
    if (n == 1 || !out.back().cancels(out.front())) return Word::from_reduced(out);
  }
}

inline Alphabet letters_alphabet(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t g = 0; g < rank; ++g) names.push_back(std::string(1, static_cast<char>('a' + g)));
  return Alphabet(names);
}

}  // namespace sqhnn::testing
