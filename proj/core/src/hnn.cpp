#include "sqhnn/hnn.hpp"

#include <algorithm>
#include <thread>

#include "sqhnn/cancel.hpp"
#include "sqhnn/errors.hpp"
#include "sqhnn/presentation.hpp"

namespace sqhnn {

namespace {

// a, b, ..., a^-1, b^-1, ...
std::vector<Letter> letters_positive_first(std::size_t rank) {
  std::vector<Letter> out;
  for (std::uint32_t g = 0; g < rank; ++g) out.push_back(gen_letter(g));
  for (std::uint32_t g = 0; g < rank; ++g) out.push_back(inv_letter(g));
  return out;
}

std::size_t require_uniform_immersion(const Endomorphism& f) {
  const std::size_t m = f.uniform_length();
  if (m < 2) {
    throw PreconditionError("periodic search needs every image of the same length >= 2");
  }
  if (!is_immersion(f).is_immersion) {
    throw PreconditionError("periodic search needs an immersion");
  }
  return m;
}

BigInt big_pow(std::size_t base, unsigned e) {
  BigInt r = 1;
  for (unsigned k = 0; k < e; ++k) r *= base;
  return r;
}

// Least rotation of w and of w^-1 is w itself.
bool canonical(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  std::vector<Letter> inv(n);
  for (std::size_t k = 0; k < n; ++k) inv[k] = w[n - 1 - k].inverse();
  for (const std::vector<Letter>* v : {&w, static_cast<const std::vector<Letter>*>(&inv)}) {
    for (std::size_t s = 0; s < n; ++s) {
      if (v == &w && s == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Letter x = (*v)[(s + k) % n];
        if (x < w[k]) return false;
        if (w[k] < x) break;
      }
    }
  }
  return true;
}

// Cyclically reduced canonical words of length n in increasing letter-code order.
void enumerate(std::size_t rank, std::size_t n, std::vector<Letter>& cur,
               std::vector<std::vector<Letter>>& out) {
  if (cur.size() == n) {
    if (!cur.back().cancels(cur.front()) && canonical(cur)) out.push_back(cur);
    return;
  }
  for (std::uint32_t code = 0; code < 2 * rank; ++code) {
    const Letter x = Letter::from_code(code);
    if (!cur.empty() && cur.back().cancels(x)) continue;
    cur.push_back(x);
    enumerate(rank, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ImmersionReport is_immersion(const Endomorphism& f) {
  const auto letters = letters_positive_first(f.rank());
  for (Letter x : letters) {
    if (f.image(x).empty()) return {false, std::make_pair(x, x)};
  }
  for (Letter x : letters) {
    const Word& fx = f.image(x);
    for (Letter y : letters) {
      if (x.cancels(y)) continue;
      if (fx.back().cancels(f.image(y).front())) return {false, std::make_pair(x, y)};
    }
  }
  return {true, std::nullopt};
}

bool passes_exponent_filter(const Endomorphism& f, unsigned i, const std::vector<long long>& v) {
  const auto a = f.abelianization_matrix();
  const std::size_t k = f.rank();
  std::vector<BigInt> cur(v.begin(), v.end());
  for (unsigned step = 0; step < i; ++step) {
    std::vector<BigInt> next(k, 0);
    for (std::size_t g = 0; g < k; ++g) {
      for (std::size_t h = 0; h < k; ++h) next[g] += BigInt(a[g][h]) * cur[h];
    }
    cur = std::move(next);
  }
  const BigInt scale = big_pow(f.uniform_length(), i);
  for (std::size_t g = 0; g < k; ++g) {
    if (cur[g] != scale * v[g]) return false;
  }
  return true;
}

std::vector<std::vector<BigInt>> periodic_exponent_filter(const Endomorphism& f, unsigned i) {
  const std::size_t m = require_uniform_immersion(f);
  const std::size_t k = f.rank();
  const IntMatrix a = to_big(f.abelianization_matrix());
  IntMatrix power(k, std::vector<BigInt>(k, 0));
  for (std::size_t g = 0; g < k; ++g) power[g][g] = 1;
  for (unsigned step = 0; step < i; ++step) {
    IntMatrix next(k, std::vector<BigInt>(k, 0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t x = 0; x < k; ++x) next[r][c] += a[r][x] * power[x][c];
      }
    }
    power = std::move(next);
  }
  const BigInt scale = big_pow(m, i);
  for (std::size_t g = 0; g < k; ++g) power[g][g] -= scale;
  return integer_kernel(power, k);
}

std::optional<PeriodicWitness> periodic_conjugacy_search(const Endomorphism& f,
                                                         std::size_t max_len, unsigned max_iter) {
  const std::size_t m = require_uniform_immersion(f);
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> words;
    std::vector<Letter> cur;
    enumerate(f.rank(), len, cur, words);
    for (unsigned i = 1; i <= max_iter; ++i) {
      std::uint64_t j = 1;
      for (unsigned s = 0; s < i; ++s) j *= m;
      for (const auto& letters : words) {
        const Word w = Word::from_reduced(letters);
        if (!passes_exponent_filter(f, i, exponent_vector(w, f.rank()))) continue;
        const Word image = power_iterate(f, i, w);
        if (image.size() != j * len || !image.is_cyclically_reduced()) {
          throw InternalError("immersion image of a cyclic word lost length");
        }
        const Word target = w.power(static_cast<unsigned>(j));
        if (is_rotation(target.letters(), image.letters())) {
          return PeriodicWitness{CyclicWord(w), i, j};
        }
      }
    }
  }
  return std::nullopt;
}

FixedWordStream::FixedWordStream(Endomorphism f, Letter seed)
    : f_(std::move(f)), seed_(seed), current_{seed} {
  if (seed.gen() >= f_.rank()) throw PreconditionError("seed letter outside the domain");
  if (!is_immersion(f_).is_immersion) throw PreconditionError("fixed word needs an immersion");
  const Word first = f_.image(seed);
  if (first.size() < 2 || first.front() != seed) {
    throw PreconditionError("image of the seed must start with the seed and be longer");
  }
}

Word FixedWordStream::prefix(std::size_t n) {
  while (current_.size() < n) current_ = f_.apply(current_);
  return current_.subword(0, n);
}

Word fixed_word_prefix(FixedWordStream& stream, std::size_t n) { return stream.prefix(n); }

PrefixScan prefix_exponent_scan(FixedWordStream& stream, std::size_t n, std::size_t gen) {
  const Word s = stream.prefix(n);
  PrefixScan scan;
  long long sum = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k].gen() == gen) sum += s[k].sign();
    scan.sums.push_back(sum);
    if (k == 0 || sum < scan.min) scan.min = sum;
    if (k == 0 || sum > scan.max) scan.max = sum;
    if (sum == 0) scan.zero_positions.push_back(k + 1);
  }
  return scan;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("empty range");
  // Largest multiple of bound that fits, minus one.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ trial);
}

Alphabet random_alphabet(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t g = 1; g <= k; ++g) names.push_back("x_" + std::to_string(g));
  return Alphabet(std::move(names));
}

Word random_reduced_word(Rng& rng, std::size_t k, std::size_t n) {
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::uint32_t code;
    if (pos == 0) {
      code = static_cast<std::uint32_t>(rng.below(2 * k));
    } else {
      code = static_cast<std::uint32_t>(rng.below(2 * k - 1));
      const std::uint32_t banned = out.back().inverse().code();
      if (code >= banned) ++code;
    }
    out.push_back(Letter::from_code(code));
  }
  return Word::from_reduced(std::move(out));
}

Endomorphism random_endomorphism(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (k < 1 || n < 1) throw PreconditionError("random endomorphism needs k, n >= 1");
  Rng rng(seed);
  std::vector<Word> images;
  for (std::size_t g = 0; g < k; ++g) images.push_back(random_reduced_word(rng, k, n));
  return Endomorphism(random_alphabet(k), std::move(images));
}

GenericityResult genericity_experiment(std::size_t k, std::size_t n, std::size_t trials,
                                       std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw PreconditionError("genericity experiment needs at least one trial");
  if (k < 1 || n < 1) throw PreconditionError("random endomorphism needs k, n >= 1");
  GenericityResult res{k, n, trials, seed, 0, 0, 0, 0, 0, std::vector<TrialRow>(trials)};

  auto run = [&](std::size_t t) {
    TrialRow row;
    row.trial = t;
    row.seed = trial_seed(seed, t);
    const Endomorphism f = random_endomorphism(k, n, row.seed);
    const PieceReport torus = max_piece(mapping_torus(f));
    const PieceReport base = max_piece(Presentation(f.domain(), f.images()));
    row.max_piece_torus = torus.max_piece;
    row.max_piece_base = base.max_piece;
    row.cprime16 = c_prime(torus, 1, 6);
    row.cprime17 = c_prime(torus, 1, 7);
    res.rows[t] = row;
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) run(t);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += workers) run(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (const auto& row : res.rows) {
    res.count_cprime16 += row.cprime16;
    res.count_cprime17 += row.cprime17;
    res.count_piece_within_two += row.max_piece_torus <= row.max_piece_base + 2;
  }
  res.fraction_cprime16 = static_cast<double>(res.count_cprime16) / static_cast<double>(trials);
  res.fraction_cprime17 = static_cast<double>(res.count_cprime17) / static_cast<double>(trials);
  return res;
}

}  // namespace sqhnn
