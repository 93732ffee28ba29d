#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sqhnn/smith.hpp"
#include "sqhnn/word.hpp"

namespace sqhnn {

// Finite presentation <alphabet | relators>. Relators are stored
// cyclically reduced; the word as given and its conjugator are kept.
class Presentation {
 public:
  struct Relator {
    Word cyclic;      // cyclically reduced core
    Word original;    // as supplied (freely reduced)
    Word conjugator;  // original == conjugator * cyclic * conjugator^-1
  };

  explicit Presentation(Alphabet alphabet, const std::vector<Word>& relators = {});

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t rank() const noexcept { return alphabet_.size(); }
  std::size_t relator_count() const noexcept { return relators_.size(); }
  const Word& relator(std::size_t i) const { return relators_.at(i).cyclic; }
  const Relator& relator_entry(std::size_t i) const { return relators_.at(i); }
  std::vector<Word> relators() const;

  void add_relator(const Word& w);

  // Relators compared as stored (cyclic cores, in order).
  friend bool operator==(const Presentation& a, const Presentation& b);

 private:
  Alphabet alphabet_;
  std::vector<Relator> relators_;
};

// Row i = exponent vector of relator i.
IntMatrix exponent_matrix(const Presentation& p);

struct AbelianizationReport {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, each dividing the next
};

AbelianizationReport abelianization(const Presentation& p);

// <t, x_1..x_k | t x_i t^-1 f(x_i)^-1>. The stable letter comes first.
Presentation mapping_torus(const Endomorphism& f, const std::string& stable_name = "t");

// Relator written over a_0..a_l after eliminating the stable letter through
// a_i = t^i a t^-i, with indices shifted so the least one is 0.
struct RewriteResult {
  std::size_t l = 0;
  Word w;                   // over rewrite_alphabet(base, l)
  std::string base = "a";   // name of the surviving generator
  std::string stable = "t"; // name of the eliminated generator
  long long min_height = 0; // least t-height of a base letter in r; subtracted from every index
  std::optional<Presentation> source;  // the presentation that was rewritten
};

// {base_0, ..., base_l}.
Alphabet rewrite_alphabet(const std::string& base, std::size_t l);

// Picks the stable letter among zero-exponent-sum generators: `stable` when
// given, else a generator literally named "t", else the first listed.
RewriteResult t_rewrite(const Presentation& p,
                        const std::optional<std::string>& stable = std::nullopt);

// The even-l relator family a_l^-1 a_0^-1 a_{l-1} a_1 ... a_{l/2} a_0^-1
// a_l a_0 a_{l-1}^-1 a_1^-1 ... a_{l/2}^-1 a_0, of length 2(l+2).
Word build_r_l(std::size_t l);

// Substitutes base_i -> t^i a t^-i and freely reduces. The result is over
// the alphabet {base, stable}, in that order.
Word expand_to_at(const Word& w);
Alphabet at_alphabet(const std::string& base = "a", const std::string& stable = "t");

// Convenience: <a, t | expand_to_at(build_r_l(l))>.
Presentation r_l_presentation(std::size_t l);

}  // namespace sqhnn
