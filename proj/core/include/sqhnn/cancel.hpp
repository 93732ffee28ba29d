#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sqhnn/presentation.hpp"

namespace sqhnn {

// One element of the symmetrized set: rotation `rotation` of relator
// `relator`, or of its inverse.
struct Occurrence {
  std::size_t relator = 0;
  bool inverted = false;
  std::size_t rotation = 0;

  auto operator<=>(const Occurrence&) const = default;
};

// All cyclic permutations of all relators and their inverses. The
// occurrence view keeps one entry per (relator, inversion, rotation); the
// distinct view collapses entries that spell the same word.
class SymmetrizedSet {
 public:
  explicit SymmetrizedSet(const Presentation& p);

  const std::vector<Occurrence>& occurrences() const noexcept { return occurrences_; }
  std::size_t size() const noexcept { return occurrences_.size(); }

  std::size_t length(const Occurrence& o) const { return cores_[o.relator].size(); }
  Letter letter(const Occurrence& o, std::size_t k) const {
    const Word& w = o.inverted ? inverses_[o.relator] : cores_[o.relator];
    return w[(o.rotation + k) % w.size()];
  }
  Word word(const Occurrence& o) const;
  // The occurrence spelling word(o)^-1.
  Occurrence inverse(const Occurrence& o) const;

  std::vector<Word> distinct_words() const;
  std::size_t relator_count() const noexcept { return cores_.size(); }
  const Word& relator(std::size_t i) const { return cores_[i]; }

 private:
  std::vector<Word> cores_;
  std::vector<Word> inverses_;
  std::vector<Occurrence> occurrences_;
};

SymmetrizedSet symmetrize(const Presentation& p);

struct PieceWitness {
  Occurrence first;
  Occurrence second;
  Word piece;
};

// Piece lengths follow one convention in every routine: the piece shared by
// two distinct occurrences is their longest common prefix, except that two
// distinct occurrences spelling the same word (distinct rotations of a
// proper power, or a repeated relator) share at most length - 1 letters.
struct PieceReport {
  std::size_t max_piece = 0;
  std::optional<PieceWitness> witness;   // lexicographically least pair
  std::vector<std::size_t> relator_length;
  std::vector<std::size_t> relator_max_piece;
  // Least number of pieces any relator splits into; nullopt when some
  // letter of every relator is not part of any piece (or no relators).
  std::optional<std::size_t> c_p;
};

PieceReport max_piece(const Presentation& p);

// Independent quadratic route: cancellation length of explicit products
// l1 * l2 over occurrence pairs with l2 not the inverse occurrence of l1.
// Throws PreconditionError when the symmetrized set exceeds 10^4 entries.
PieceReport piece_oracle(const Presentation& p);

inline constexpr std::size_t kPieceOracleCap = 10000;

// C'(num/den): every piece of every relator r is strictly shorter than
// (num/den)|r|.
bool c_prime(const PieceReport& rep, unsigned num = 1, unsigned den = 6);
bool c_prime(const Presentation& p, unsigned num = 1, unsigned den = 6);

}  // namespace sqhnn
