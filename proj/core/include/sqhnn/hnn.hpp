#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sqhnn/smith.hpp"
#include "sqhnn/word.hpp"

// Endomorphism-side tools for strictly ascending HNN extensions of free
// groups: immersions, periodic conjugacy classes, the fixed word of an
// endomorphism and the random-endomorphism experiment.

namespace sqhnn {

struct ImmersionReport {
  bool is_immersion = false;
  // First pair (x, y), x y != e, where f(x) f(y) cancels. Pairs run over
  // x then y in the order a, b, ..., a^-1, b^-1, ... An empty image is
  // reported as (x, x).
  std::optional<std::pair<Letter, Letter>> failure;
};

ImmersionReport is_immersion(const Endomorphism& f);

struct PeriodicWitness {
  CyclicWord w;
  unsigned i = 0;
  std::uint64_t j = 0;
};

// Searches cyclic words 1 <= |w| <= max_len (one representative per class
// up to rotation and inversion) and 1 <= i <= max_iter for f^i(w) equal to
// w^(m^i) up to rotation. Returns the least witness in (|w|, i, word) order.
// Throws PreconditionError unless f is an immersion with uniform image
// length m >= 2.
std::optional<PeriodicWitness> periodic_conjugacy_search(const Endomorphism& f,
                                                         std::size_t max_len, unsigned max_iter);

// Z-basis of {v : A^i v = m^i v}, A the abelianization matrix of f.
// Same preconditions as the search.
std::vector<std::vector<BigInt>> periodic_exponent_filter(const Endomorphism& f, unsigned i);

// Whether exponent vector v satisfies A^i v = m^i v.
bool passes_exponent_filter(const Endomorphism& f, unsigned i, const std::vector<long long>& v);

// Prefixes of s = lim f^i(seed).
class FixedWordStream {
 public:
  // Throws PreconditionError unless f is an immersion and f(seed) starts
  // with seed and has length >= 2.
  FixedWordStream(Endomorphism f, Letter seed);

  // First n letters of s.
  Word prefix(std::size_t n);
  const Endomorphism& map() const noexcept { return f_; }
  Letter seed() const noexcept { return seed_; }

 private:
  Endomorphism f_;
  Letter seed_;
  Word current_;
};

Word fixed_word_prefix(FixedWordStream& stream, std::size_t n);

struct PrefixScan {
  std::vector<long long> sums;          // sums[k-1]: exponent of gen in prefix of length k
  long long min = 0;
  long long max = 0;
  std::vector<std::size_t> zero_positions;  // lengths k >= 1 with sum 0
};

PrefixScan prefix_exponent_scan(FixedWordStream& stream, std::size_t n, std::size_t gen);

// mt19937_64 with its own bounded draw: the engine output is fixed by the
// standard, the std distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
// Seed of trial `trial` in an experiment seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// {x_1, ..., x_k}.
Alphabet random_alphabet(std::size_t k);

// Uniform reduced word of length n: first letter uniform over 2k letters,
// each later one uniform over the 2k - 1 letters that do not cancel.
Word random_reduced_word(Rng& rng, std::size_t k, std::size_t n);

// k independent uniform reduced words of length n as images of x_1..x_k.
Endomorphism random_endomorphism(std::size_t k, std::size_t n, std::uint64_t seed);

struct TrialRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t max_piece_base = 0;
  std::size_t max_piece_torus = 0;
  bool cprime16 = false;
  bool cprime17 = false;
};

struct GenericityResult {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t count_cprime16 = 0;
  std::size_t count_cprime17 = 0;
  // Trials with max_piece(torus) <= max_piece(base) + 2.
  std::size_t count_piece_within_two = 0;
  double fraction_cprime16 = 0;
  double fraction_cprime17 = 0;
  std::vector<TrialRow> rows;
};

// Per trial: mapping torus of random_endomorphism(k, n, trial_seed(seed, i))
// against the base presentation <x_1..x_k | w_1..w_k>. Trials are spread
// over `threads` workers; the result does not depend on the thread count.
GenericityResult genericity_experiment(std::size_t k, std::size_t n, std::size_t trials,
                                       std::uint64_t seed, unsigned threads = 1);

}  // namespace sqhnn
