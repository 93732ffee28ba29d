#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqhnn/presentation.hpp"

// Non-positive curvature of one-vertex square complexes.
//
// For a presentation whose relators are all cyclically reduced of length 4,
// the presentation complex is a square complex with a single vertex. It is
// non-positively curved iff the link of that vertex has girth >= 4. The
// link condition is checked twice: through the two combinatorial conditions
// on 2-letter subwords of the symmetrized relators, and directly on the
// link multigraph. The two routes must agree.

namespace sqhnn {

// Throws PreconditionError unless every relator has length exactly 4.
void require_square(const Presentation& p);

// A cyclic 2-letter subword x y of relator `relator` (or of its inverse),
// where x sits at index `rotation` of the possibly inverted relator. It is
// the first pair of the rotation of L starting at that index.
struct PairOccurrence {
  std::size_t relator = 0;
  bool inverted = false;
  std::size_t rotation = 0;

  auto operator<=>(const PairOccurrence&) const = default;
};

struct TwoLetter {
  Letter first;
  Letter second;

  auto operator<=>(const TwoLetter&) const = default;
};

using PairIndex = std::map<TwoLetter, std::vector<PairOccurrence>>;

PairIndex build_pair_index(const Presentation& p);

enum class ViolationKind {
  kRepeatedPair,   // a 2-letter subword occurs more than once in L
  kTriangle,       // x y, y^-1 z and x z all occur in L
  kShortCycle,     // link cycle of length < 4
  kDisagreement,   // the subword conditions and the link girth disagree
};

struct Violation {
  ViolationKind kind;
  // kRepeatedPair: {xy}; kTriangle: {xy, y^-1 z, xz}; kShortCycle: the
  // link vertices of the cycle, one letter each (direction leaving the vertex).
  std::vector<Word> words;
  std::vector<PairOccurrence> occurrences;
  std::string detail;
};

struct NpcReport {
  bool pass = false;
  bool condition1 = true;
  bool condition2 = true;
  std::optional<std::size_t> girth;  // nullopt: the link is a forest
  bool consistent = true;
  std::vector<Violation> violations;
};

NpcReport check_condition_1(const Presentation& p);
NpcReport check_condition_2(const Presentation& p);

// Link of the single vertex. Vertex ids are letter codes: the vertex for
// letter x is the direction leaving along x. The corner between x and y in
// a relator joins x^-1 and y.
struct LinkGraph {
  struct Edge {
    std::uint32_t u;
    std::uint32_t v;
    std::size_t relator;
    std::size_t corner;  // index of x in the relator, y follows cyclically
  };
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
};

LinkGraph build_link(const Presentation& p);

struct GirthResult {
  std::optional<std::size_t> girth;
  std::vector<std::uint32_t> cycle;  // vertices of one shortest cycle
};

// Loops count 1 and parallel edges 2.
GirthResult girth(const LinkGraph& g);

NpcReport npc_check(const Presentation& p);

std::string link_to_dot(const LinkGraph& g, const Alphabet& alphabet);

std::string to_string(ViolationKind k);

}  // namespace sqhnn
