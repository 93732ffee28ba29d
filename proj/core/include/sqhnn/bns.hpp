#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sqhnn/presentation.hpp"

// Characters of two-generator one-relator groups, classified from the walk
// the relator traces in Z^2.

namespace sqhnn {

using Point = std::pair<long long, long long>;

// Values on the first and second generator of the presentation, stored in
// primitive form.
struct Character {
  long long first = 0;
  long long second = 0;

  // Divides out the gcd; throws PreconditionError for (0, 0).
  static Character primitive(long long first, long long second);
  Character operator-() const { return {-first, -second}; }
  long long operator()(const Point& p) const { return first * p.first + second * p.second; }
  bool operator==(const Character&) const = default;
};

struct RelatorWalk {
  std::vector<Point> points;  // p_0 .. p_m
  std::vector<Letter> steps;  // steps[k] moves p_k to p_{k+1}

  bool closed() const { return points.front() == points.back(); }
};

// p_k = exponent sums of the first k letters in generators 0 and 1.
// Throws PreconditionError for a word that uses a third generator.
RelatorWalk walk(const Word& r);

struct HullData {
  std::vector<Point> vertices;               // counter-clockwise, no collinear points
  std::vector<std::size_t> visits;           // walk visits per vertex
  // Per hull edge (vertices[k], vertices[k+1 mod size]), runs of
  // consecutive walk indices whose points lie on its supporting line.
  std::vector<std::vector<std::vector<std::size_t>>> edge_paths;
};

// Hull of the cyclic vertex set p_0..p_{m-1} of a closed walk, or of all
// points otherwise.
HullData hull(const RelatorWalk& w);

enum class PairVerdict { kFibered, kStrictlyAscending, kNeither };

struct BnsClassification {
  Character chi;
  PairVerdict pair_verdict = PairVerdict::kNeither;
  bool chi_in_sigma = false;
  bool minus_chi_in_sigma = false;
};

// Membership of chi in Sigma: along the cyclic walk p_0..p_{m-1}, the
// minimum of chi is attained at one vertex, or at exactly two cyclically
// adjacent vertices whose connecting letter chi kills. With this
// orientation BS(1,2) = <a, t | t a t^-1 a^-2> has (0, -1) in Sigma.
bool in_sigma(const RelatorWalk& w, const Character& chi);

// Throws PreconditionError unless p has two generators and one nontrivial
// relator and chi vanishes on its exponent vector.
BnsClassification brown_classify(const Presentation& p, Character chi);

// Every valid primitive character with coordinates in [-n, n], one per
// ray (not per ray pair), in lexicographic order of (first, second).
std::vector<BnsClassification> sweep(const Presentation& p, long long n);

std::string to_string(PairVerdict v);

}  // namespace sqhnn
