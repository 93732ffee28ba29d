#include "sqhnn/word.hpp"

#include <algorithm>
#include <unordered_set>

#include "sqhnn/errors.hpp"

namespace sqhnn {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw AlphabetError("alphabet needs at least one generator");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw AlphabetError("empty generator name");
    if (!seen.insert(n).second) {
      throw AlphabetError("duplicate generator name '" + n + "'");
    }
  }
}

const std::string& Alphabet::name(std::size_t gen) const {
  if (gen >= names_.size()) {
    throw AlphabetError("generator index " + std::to_string(gen) +
                        " out of range");
  }
  return names_[gen];
}

std::size_t Alphabet::index(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw AlphabetError("unknown generator '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - names_.begin());
}

bool Alphabet::contains(std::string_view name) const noexcept {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

// ---------------------------------------------------------------------------

Word reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word::from_reduced(std::move(out));
}

Word::Word(std::span<const Letter> letters) : letters_(reduce(letters).letters_) {}

Word Word::from_reduced(std::vector<Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i - 1].cancels(letters[i])) {
      throw InternalError("Word::from_reduced given an unreduced sequence");
    }
  }
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l = l.inverse();
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

Word Word::rotated(std::size_t shift) const {
  if (letters_.empty()) return *this;
  shift %= letters_.size();
  Word w;
  w.letters_.reserve(letters_.size());
  w.letters_.insert(w.letters_.end(), letters_.begin() + static_cast<std::ptrdiff_t>(shift),
                    letters_.end());
  w.letters_.insert(w.letters_.end(), letters_.begin(),
                    letters_.begin() + static_cast<std::ptrdiff_t>(shift));
  return w;
}

Word Word::power(unsigned k) const {
  Word result;
  for (unsigned i = 0; i < k; ++i) result *= *this;
  return result;
}

bool Word::is_cyclically_reduced() const noexcept {
  return letters_.size() < 2 || !letters_.front().cancels(letters_.back());
}

std::size_t Word::rank_used() const noexcept {
  std::size_t r = 0;
  for (Letter l : letters_) r = std::max<std::size_t>(r, l.gen() + 1);
  return r;
}

Word operator*(const Word& u, const Word& v) {
  Word result = u;
  result *= v;
  return result;
}

Word& Word::operator*=(const Word& v) {
  std::size_t k = 0;
  while (k < v.size() && !letters_.empty() && letters_.back().cancels(v[k])) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(k),
                  v.letters_.end());
  return *this;
}

// ---------------------------------------------------------------------------

CyclicWord::CyclicWord(Word core) : core_(std::move(core)) {
  if (!core_.is_cyclically_reduced()) {
    throw PreconditionError("CyclicWord requires a cyclically reduced word");
  }
}

Word CyclicWord::least_rotation() const {
  Word best = core_;
  for (std::size_t s = 1; s < core_.size(); ++s) {
    Word r = core_.rotated(s);
    if (r < best) best = std::move(r);
  }
  return best;
}

bool operator==(const CyclicWord& a, const CyclicWord& b) {
  return is_rotation(a.core_.letters(), b.core_.letters());
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t k = 0;
  const std::size_t n = w.size();
  while (2 * k + 2 <= n && w[k].cancels(w[n - 1 - k])) ++k;
  return CyclicReduction{CyclicWord(w.subword(k, n - 2 * k)), w.subword(0, k)};
}

bool is_rotation(std::span<const Letter> base, std::span<const Letter> rotated) {
  const std::size_t n = base.size();
  if (n != rotated.size()) return false;
  if (n == 0) return true;
  // Knuth-Morris-Pratt search for `rotated` inside base·base.
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && rotated[i] != rotated[k]) k = fail[k - 1];
    if (rotated[i] == rotated[k]) ++k;
    fail[i] = k;
  }
  for (std::size_t i = 0, k = 0; i < 2 * n - 1; ++i) {
    const Letter c = base[i % n];
    while (k > 0 && c != rotated[k]) k = fail[k - 1];
    if (c == rotated[k]) ++k;
    if (k == n) return true;
  }
  return false;
}

bool is_conjugate(const Word& u, const Word& v) {
  return cyclic_reduce(u).core == cyclic_reduce(v).core;
}

long long exponent_sum(const Word& w, std::size_t gen) {
  long long s = 0;
  for (Letter l : w) {
    if (l.gen() == gen) s += l.sign();
  }
  return s;
}

long long exponent_sum(const Word& w, const Alphabet& alphabet,
                       std::string_view gen) {
  return exponent_sum(w, alphabet.index(gen));
}

std::vector<long long> exponent_vector(const Word& w, std::size_t rank) {
  std::vector<long long> v(rank, 0);
  for (Letter l : w) {
    if (l.gen() >= rank) throw AlphabetError("letter outside alphabet");
    v[l.gen()] += l.sign();
  }
  return v;
}

// ---------------------------------------------------------------------------

Endomorphism::Endomorphism(Alphabet domain, std::vector<Word> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (images_.size() != domain_.size()) {
    throw AlphabetError("endomorphism needs exactly one image per generator");
  }
  for (const auto& img : images_) {
    if (img.rank_used() > domain_.size()) {
      throw AlphabetError("endomorphism image uses a letter outside the domain");
    }
  }
}

Endomorphism Endomorphism::identity(const Alphabet& domain) {
  std::vector<Word> images;
  for (std::uint32_t g = 0; g < domain.size(); ++g) images.push_back(Word{gen_letter(g)});
  return Endomorphism(domain, std::move(images));
}

Word Endomorphism::image(Letter l) const {
  const Word& img = images_.at(l.gen());
  return l.positive() ? img : img.inverse();
}

Word Endomorphism::apply(const Word& w) const {
  if (w.rank_used() > domain_.size()) {
    throw AlphabetError("word uses a letter outside the endomorphism domain");
  }
  std::vector<Letter> raw;
  for (Letter l : w) {
    const Word& img = images_[l.gen()];
    if (l.positive()) {
      raw.insert(raw.end(), img.begin(), img.end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        raw.push_back(it->inverse());
      }
    }
  }
  return reduce(raw);
}

std::size_t Endomorphism::uniform_length() const noexcept {
  const std::size_t m = images_.front().size();
  for (const auto& img : images_) {
    if (img.size() != m) return 0;
  }
  return m;
}

std::vector<std::vector<long long>> Endomorphism::abelianization_matrix() const {
  const std::size_t k = rank();
  std::vector<std::vector<long long>> a(k, std::vector<long long>(k, 0));
  for (std::size_t h = 0; h < k; ++h) {
    for (Letter l : images_[h]) a[l.gen()][h] += l.sign();
  }
  return a;
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (!(f.domain() == g.domain())) {
    throw AlphabetError("compose: endomorphisms over different alphabets");
  }
  std::vector<Word> images;
  images.reserve(g.rank());
  for (const auto& img : g.images()) images.push_back(f.apply(img));
  return Endomorphism(f.domain(), std::move(images));
}

Word power_iterate(const Endomorphism& f, unsigned i, const Word& w) {
  Word cur = w;
  for (unsigned k = 0; k < i; ++k) cur = f.apply(cur);
  return cur;
}

}  // namespace sqhnn
