#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sqhnn/presentation.hpp"

// Cutting even-length relators down to length 4 by repeatedly naming a
// cyclic window of three letters with a fresh generator.

namespace sqhnn {

// new_gen = left mid right, recorded as the length-4 relator
// left mid right new_gen^-1. Letters are over the output alphabet.
struct Substitution {
  std::string new_gen;
  std::uint32_t gen = 0;
  Letter left;
  Letter mid;
  Letter right;
  std::size_t relator = 0;  // source relator being shortened

  Word definition() const { return Word{left, mid, right}; }
  Word relator_word() const { return Word{left, mid, right, inv_letter(gen)}; }
};

// Per source relator, the cut index used at each step. A cut at index c
// replaces the cyclic window (c, c+1, c+2) of the working relator w by the
// new letter u; the next working relator is u followed by the letters after
// the window, in cyclic order.
using Schedule = std::vector<std::vector<std::size_t>>;

struct SquarifiedPresentation {
  Presentation presentation;
  std::vector<Substitution> substitutions;  // creation order
  Schedule schedule;
  Presentation source;
  // Images in source.alphabet() of the output generators that are not
  // introduced by a substitution; those come last in the output alphabet.
  std::vector<Word> base_images;
};

// Builds the square presentation for a rewritten relator of the form
//   a_l^-1 a_0^-1 x_3 .. x_{n-1} a_0^-1 a_l a_0 x_{n+3} .. x_{2n-1} a_0
// with every x_i in {a_1, .., a_{l-1}}^{+-1}. Throws ParityError for odd
// length, PreconditionError for l < 2 and TemplateMismatch otherwise.
SquarifiedPresentation template_squarify(const RewriteResult& rw);

struct VerifyReport {
  bool ok = false;
  std::string diagnostic;
  std::optional<Word> witness;  // over the source alphabet
};

// Maps every generator back to the source alphabet and checks each relator
// becomes trivial or a conjugate of a source relator (or its inverse), with
// every source relator accounted for.
VerifyReport verify_substitutions(const SquarifiedPresentation& sq);

// Applies an explicit schedule. Relators already of length 4 need an empty
// entry. Throws PreconditionError for a malformed schedule.
SquarifiedPresentation replay_schedule(const Presentation& p, const Schedule& schedule);

inline constexpr std::size_t kDefaultLeafBound = 1'000'000;

struct SquarifySearch {
  std::optional<SquarifiedPresentation> result;
  std::size_t leaves = 0;
  bool bound_reached = false;
};

// Depth-first over cut positions (relators in order, cuts ascending); the
// first leaf whose presentation passes npc_check wins. Branches are cut as
// soon as the finished length-4 relators repeat a 2-letter subword. Throws
// ParityError for an odd relator and PreconditionError for length 2.
SquarifySearch general_squarify_search(const Presentation& p,
                                       std::size_t leaf_bound = kDefaultLeafBound);

}  // namespace sqhnn
