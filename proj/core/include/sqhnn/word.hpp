#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqhnn {

// Ordered, duplicate-free list of generator names. Letters refer to
// generators by index; names only matter for text I/O.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::initializer_list<std::string> names)
      : Alphabet(std::vector<std::string>(names)) {}

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t gen) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  // Index of `name`, throws AlphabetError when absent.
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const noexcept;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

// A generator or its inverse, packed as 2*gen + (inverse ? 1 : 0) so that
// inversion is a single xor and the natural order is a, a^-1, b, b^-1, ...
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(std::uint32_t gen, int sign)
      : code_(gen * 2u + (sign < 0 ? 1u : 0u)) {}

  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::uint32_t gen() const noexcept { return code_ >> 1; }
  constexpr int sign() const noexcept { return (code_ & 1u) ? -1 : 1; }
  constexpr bool positive() const noexcept { return (code_ & 1u) == 0; }
  constexpr std::uint32_t code() const noexcept { return code_; }
  constexpr Letter inverse() const noexcept { return from_code(code_ ^ 1u); }
  constexpr bool cancels(Letter other) const noexcept {
    return (code_ ^ other.code_) == 1u;
  }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  std::uint32_t code_ = 0;
};

inline constexpr Letter gen_letter(std::uint32_t gen) { return Letter(gen, 1); }
inline constexpr Letter inv_letter(std::uint32_t gen) { return Letter(gen, -1); }

// Freely reduced word. Every constructor reduces, so a Word value never
// contains an adjacent pair x x^-1. The empty word is the identity.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::span<const Letter> letters);
  explicit Word(const std::vector<Letter>& letters)
      : Word(std::span<const Letter>(letters)) {}
  Word(std::initializer_list<Letter> letters)
      : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

  // Wraps letters the caller guarantees are already reduced.
  static Word from_reduced(std::vector<Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word inverse() const;
  // Letters [pos, pos+len) without re-reduction (subwords stay reduced).
  Word subword(std::size_t pos, std::size_t len) const;
  // Cyclic rotation starting at `shift`: w[shift..] w[..shift].
  // Only meaningful for cyclically reduced words.
  Word rotated(std::size_t shift) const;
  Word power(unsigned k) const;
  bool is_cyclically_reduced() const noexcept;
  // Largest generator index used, plus one; 0 for the identity.
  std::size_t rank_used() const noexcept;

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v);

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word& o) const { return letters_ <=> o.letters_; }

 private:
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw);

// Reduced word up to rotation. Equality is rotation equality.
class CyclicWord {
 public:
  CyclicWord() = default;
  // Throws PreconditionError unless `core` is cyclically reduced.
  explicit CyclicWord(Word core);

  const Word& core() const noexcept { return core_; }
  std::size_t size() const noexcept { return core_.size(); }

  // Lexicographically least rotation.
  Word least_rotation() const;

  friend bool operator==(const CyclicWord& a, const CyclicWord& b);

 private:
  Word core_;
};

struct CyclicReduction {
  CyclicWord core;
  Word conjugator;  // w == conjugator * core * conjugator^-1
};

CyclicReduction cyclic_reduce(const Word& w);

// True iff `rotated` is a rotation of `base` (equal lengths required).
bool is_rotation(std::span<const Letter> base, std::span<const Letter> rotated);

// Conjugacy in the free group: cyclic cores equal up to rotation.
bool is_conjugate(const Word& u, const Word& v);

// Signed count of occurrences of generator `gen`.
long long exponent_sum(const Word& w, std::size_t gen);
long long exponent_sum(const Word& w, const Alphabet& alphabet,
                       std::string_view gen);
std::vector<long long> exponent_vector(const Word& w, std::size_t rank);

// Generator-to-word assignment on a free group.
class Endomorphism {
 public:
  Endomorphism(Alphabet domain, std::vector<Word> images);

  static Endomorphism identity(const Alphabet& domain);

  const Alphabet& domain() const noexcept { return domain_; }
  std::size_t rank() const noexcept { return domain_.size(); }
  const Word& image(std::size_t gen) const { return images_.at(gen); }
  const std::vector<Word>& images() const noexcept { return images_; }
  Word image(Letter l) const;

  Word apply(const Word& w) const;

  // Length m when every generator image has length m, otherwise 0.
  std::size_t uniform_length() const noexcept;

  // Abelianization matrix: entry (g, h) is the exponent sum of generator g
  // in the image of generator h, so exponents(f(w)) = A * exponents(w).
  std::vector<std::vector<long long>> abelianization_matrix() const;

  bool operator==(const Endomorphism&) const = default;

 private:
  Alphabet domain_;
  std::vector<Word> images_;
};

// (f o g)(x) = f(g(x)).
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

// f^i(w); i == 0 returns w.
Word power_iterate(const Endomorphism& f, unsigned i, const Word& w);

}  // namespace sqhnn
