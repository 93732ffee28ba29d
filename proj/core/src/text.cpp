#include "sqhnn/text.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "sqhnn/errors.hpp"

namespace sqhnn {

namespace {

bool name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  std::size_t pos() const { return pos_; }

  bool accept(std::string_view tok) {
    skip_space();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) {
      throw ParseError("expected '" + std::string(tok) + "'", pos_);
    }
  }

  std::string name() {
    skip_space();
    if (!name_start(peek())) throw ParseError("expected a generator name", pos_);
    std::size_t start = pos_;
    while (pos_ < s_.size() && name_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    long long v = 0;
    const char* b = s_.data() + start;
    if (*b == '+') ++b;
    auto [p, ec] = std::from_chars(b, s_.data() + pos_, v);
    if (ec != std::errc() || p != s_.data() + pos_) {
      throw ParseError("expected an integer exponent", start);
    }
    return v;
  }

  // Word until one of the stop characters (or end of input).
  Word word(const Alphabet& alphabet, std::string_view stops) {
    std::vector<Letter> raw;
    for (;;) {
      skip_space();
      if (pos_ >= s_.size()) break;
      char c = peek();
      if (stops.find(c) != std::string_view::npos) break;
      std::size_t at = pos_;
      std::string n = name();
      if (n == "e") {
        continue;
      }
      long long k = 1;
      if (accept("^")) {
        k = integer();
        if (k == 0) throw ParseError("exponent must be nonzero", at);
      }
      if (!alphabet.contains(n)) throw ParseError("unknown generator '" + n + "'", at);
      const auto g = static_cast<std::uint32_t>(alphabet.index(n));
      const Letter l(g, k < 0 ? -1 : 1);
      for (long long i = 0; i < (k < 0 ? -k : k); ++i) raw.push_back(l);
    }
    return reduce(raw);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string format_letters(std::span<const Letter> letters, const Alphabet& alphabet) {
  if (letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long long run = static_cast<long long>(j - i) * letters[i].sign();
    if (!out.empty()) out += ' ';
    out += alphabet.name(letters[i].gen());
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Cursor c(text);
  Word w = c.word(alphabet, "");
  if (!c.at_end()) throw ParseError("unexpected character", c.pos());
  return w;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  return format_letters(w.letters(), alphabet);
}

Presentation parse_presentation(std::string_view text) {
  Cursor c(text);
  c.expect("<");
  std::vector<std::string> names;
  do {
    std::size_t at = c.pos();
    std::string n = c.name();
    if (n == "e") throw ParseError("'e' is reserved for the identity", at);
    for (const auto& m : names) {
      if (m == n) throw ParseError("duplicate generator '" + n + "'", at);
    }
    names.push_back(std::move(n));
  } while (c.accept(","));
  c.expect("|");

  Presentation p{Alphabet(std::move(names))};
  c.skip_space();
  if (!c.accept(">")) {
    do {
      std::size_t at = c.pos();
      Word lhs = c.word(p.alphabet(), ",=>");
      Word rel = lhs;
      if (c.accept("=")) {
        Word rhs = c.word(p.alphabet(), ",>");
        rel = lhs * rhs.inverse();
      }
      if (rel.empty()) throw ParseError("relator reduces to the identity", at);
      p.add_relator(rel);
    } while (c.accept(","));
    c.expect(">");
  }
  if (!c.at_end()) throw ParseError("trailing input after '>'", c.pos());
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "< ";
  const auto& names = p.alphabet().names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    out += i ? ", " : " ";
    out += format_word(p.relator(i), p.alphabet());
  }
  out += " >";
  return out;
}

Endomorphism parse_endomorphism(std::string_view text) {
  struct Chunk {
    std::size_t offset;
    std::string_view body;
  };
  std::vector<Chunk> chunks;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == ';' || text[i] == '\n') {
      std::string_view body = text.substr(start, i - start);
      if (body.find_first_not_of(" \t\r") != std::string_view::npos) {
        chunks.push_back({start, body});
      }
      start = i + 1;
    }
  }
  if (chunks.empty()) throw ParseError("empty endomorphism", 0);

  std::vector<std::string> names;
  std::vector<std::string_view> bodies;
  std::vector<std::size_t> body_offsets;
  for (const auto& ch : chunks) {
    const std::size_t arrow = ch.body.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected '->'", ch.offset);
    Cursor c(ch.body.substr(0, arrow));
    std::string n = c.name();
    if (!c.at_end()) throw ParseError("expected '->'", ch.offset + c.pos());
    if (n == "e") throw ParseError("'e' is reserved for the identity", ch.offset);
    for (const auto& m : names) {
      if (m == n) throw ParseError("generator '" + n + "' assigned twice", ch.offset);
    }
    names.push_back(std::move(n));
    bodies.push_back(ch.body.substr(arrow + 2));
    body_offsets.push_back(ch.offset + arrow + 2);
  }

  Alphabet alphabet(names);
  std::vector<Word> images;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    try {
      images.push_back(parse_word(bodies[i], alphabet));
    } catch (const ParseError& e) {
      throw ParseError("bad image of '" + names[i] + "'", body_offsets[i] + e.position());
    }
  }
  return Endomorphism(std::move(alphabet), std::move(images));
}

std::string format_endomorphism(const Endomorphism& f) {
  std::string out;
  for (std::size_t g = 0; g < f.rank(); ++g) {
    if (g) out += ", ";
    out += f.domain().name(g) + " -> " + format_word(f.image(g), f.domain());
  }
  return out;
}

}  // namespace sqhnn
