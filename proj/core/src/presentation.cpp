#include "sqhnn/presentation.hpp"

#include <algorithm>
#include <climits>

#include "sqhnn/errors.hpp"

namespace sqhnn {

Presentation::Presentation(Alphabet alphabet, const std::vector<Word>& relators)
    : alphabet_(std::move(alphabet)) {
  for (const auto& r : relators) add_relator(r);
}

void Presentation::add_relator(const Word& w) {
  if (w.empty()) throw PreconditionError("relator reduces to the identity");
  if (w.rank_used() > alphabet_.size()) {
    throw AlphabetError("relator uses a letter outside the alphabet");
  }
  auto red = cyclic_reduce(w);
  relators_.push_back(Relator{red.core.core(), w, red.conjugator});
}

std::vector<Word> Presentation::relators() const {
  std::vector<Word> out;
  out.reserve(relators_.size());
  for (const auto& r : relators_) out.push_back(r.cyclic);
  return out;
}

bool operator==(const Presentation& a, const Presentation& b) {
  if (!(a.alphabet_ == b.alphabet_) || a.relators_.size() != b.relators_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.relators_.size(); ++i) {
    if (a.relators_[i].cyclic != b.relators_[i].cyclic) return false;
  }
  return true;
}

IntMatrix exponent_matrix(const Presentation& p) {
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    rows.push_back(exponent_vector(p.relator(i), p.rank()));
  }
  return to_big(rows);
}

AbelianizationReport abelianization(const Presentation& p) {
  auto diag = smith_diagonal(exponent_matrix(p));
  AbelianizationReport rep;
  rep.betti = p.rank() - diag.size();
  for (auto& d : diag) {
    if (d > 1) rep.torsion.push_back(d);
  }
  return rep;
}

Presentation mapping_torus(const Endomorphism& f, const std::string& stable_name) {
  if (f.domain().contains(stable_name)) {
    throw AlphabetError("stable letter name '" + stable_name +
                        "' collides with a domain generator");
  }
  std::vector<std::string> names{stable_name};
  for (const auto& n : f.domain().names()) names.push_back(n);
  Presentation p{Alphabet(std::move(names))};

  const Letter t = gen_letter(0);
  for (std::uint32_t g = 0; g < f.rank(); ++g) {
    std::vector<Letter> raw{t, gen_letter(g + 1), t.inverse()};
    for (auto it = f.image(g).letters().rbegin(); it != f.image(g).letters().rend(); ++it) {
      raw.push_back(Letter(it->gen() + 1, -it->sign()));
    }
    p.add_relator(reduce(raw));
  }
  return p;
}

Alphabet rewrite_alphabet(const std::string& base, std::size_t l) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= l; ++i) names.push_back(base + "_" + std::to_string(i));
  return Alphabet(std::move(names));
}

Alphabet at_alphabet(const std::string& base, const std::string& stable) {
  return Alphabet{base, stable};
}

RewriteResult t_rewrite(const Presentation& p, const std::optional<std::string>& stable) {
  if (p.rank() != 2 || p.relator_count() != 1) {
    throw PreconditionError("t_rewrite needs a 2-generator 1-relator presentation");
  }
  const Word& r = p.relator(0);

  std::size_t t_gen = 2;
  if (stable) {
    t_gen = p.alphabet().index(*stable);
    if (exponent_sum(r, t_gen) != 0) {
      throw PreconditionError("generator '" + *stable +
                              "' has nonzero exponent sum in the relator");
    }
  } else {
    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < 2; ++g) {
      if (exponent_sum(r, g) == 0) candidates.push_back(g);
    }
    if (candidates.empty()) {
      throw PreconditionError("no generator has zero exponent sum in the relator");
    }
    t_gen = candidates.front();
    for (std::size_t g : candidates) {
      if (p.alphabet().name(g) == "t") t_gen = g;
    }
  }
  const std::size_t a_gen = 1 - t_gen;

  long long h = 0, lo = LLONG_MAX, hi = LLONG_MIN;
  std::vector<std::pair<long long, int>> heights;
  for (Letter x : r) {
    if (x.gen() == t_gen) {
      h += x.sign();
    } else {
      heights.emplace_back(h, x.sign());
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
  }
  if (heights.empty()) throw PreconditionError("relator is a pure power of the stable letter");

  std::vector<Letter> raw;
  raw.reserve(heights.size());
  for (auto [height, sign] : heights) {
    raw.emplace_back(static_cast<std::uint32_t>(height - lo), sign);
  }

  RewriteResult res;
  res.l = static_cast<std::size_t>(hi - lo);
  res.w = reduce(raw);
  res.base = p.alphabet().name(a_gen);
  res.stable = p.alphabet().name(t_gen);
  res.min_height = lo;
  res.source = p;
  return res;
}

Word build_r_l(std::size_t l) {
  if (l < 2 || l % 2 != 0) {
    throw PreconditionError("r_l needs an even l >= 2, got " + std::to_string(l));
  }
  const auto a = [](std::size_t i, int s) { return Letter(static_cast<std::uint32_t>(i), s); };

  std::vector<std::size_t> middle;
  std::size_t lo = 1, hi = l - 1;
  while (lo < hi) {
    middle.push_back(hi--);
    middle.push_back(lo++);
  }
  if (lo == hi) middle.push_back(lo);

  std::vector<Letter> raw{a(l, -1), a(0, -1)};
  for (std::size_t i : middle) raw.push_back(a(i, 1));
  raw.push_back(a(0, -1));
  raw.push_back(a(l, 1));
  raw.push_back(a(0, 1));
  for (std::size_t i : middle) raw.push_back(a(i, -1));
  raw.push_back(a(0, 1));
  return reduce(raw);
}

Word expand_to_at(const Word& w) {
  const Letter a = gen_letter(0), t = gen_letter(1);
  std::vector<Letter> raw;
  for (Letter x : w) {
    raw.insert(raw.end(), x.gen(), t);
    raw.push_back(x.positive() ? a : a.inverse());
    raw.insert(raw.end(), x.gen(), t.inverse());
  }
  return reduce(raw);
}

Presentation r_l_presentation(std::size_t l) {
  return Presentation(at_alphabet(), {expand_to_at(build_r_l(l))});
}

}  // namespace sqhnn
