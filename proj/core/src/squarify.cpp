#include "sqhnn/squarify.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "sqhnn/errors.hpp"
#include "sqhnn/npc.hpp"

namespace sqhnn {

namespace {

struct Cut {
  Substitution sub;
  std::vector<Letter> next;
};

// Window (c, c+1, c+2) of `working` becomes letter u.
Cut apply_cut(const std::vector<Letter>& working, std::size_t c, std::uint32_t u) {
  const std::size_t n = working.size();
  Cut out;
  out.sub.gen = u;
  out.sub.left = working[c % n];
  out.sub.mid = working[(c + 1) % n];
  out.sub.right = working[(c + 2) % n];
  out.next.push_back(gen_letter(u));
  for (std::size_t k = 3; k < n; ++k) out.next.push_back(working[(c + k) % n]);
  return out;
}

void check_lengths(const Presentation& p) {
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    const std::size_t n = p.relator(i).size();
    if (n % 2 != 0) {
      throw ParityError("relator " + std::to_string(i) + " has odd length " + std::to_string(n));
    }
    if (n < 4) {
      throw PreconditionError("relator " + std::to_string(i) + " has length " +
                              std::to_string(n) + ", need at least 4");
    }
  }
}

// New generators for relator i are named prefix_k (one long relator) or
// prefix<i+1>_k (several).
struct Naming {
  std::string prefix;
  bool indexed = false;

  std::string operator()(std::size_t rel, std::size_t k) const {
    return indexed ? prefix + std::to_string(rel + 1) + "_" + std::to_string(k)
                   : prefix + "_" + std::to_string(k);
  }
};

// First prefix among u, v, w, s, y, z, u', ... whose names avoid `taken`.
Naming fresh_naming(const std::vector<std::string>& taken, bool indexed,
                    const std::vector<std::size_t>& steps) {
  for (std::size_t round = 0;; ++round) {
    for (std::string pre : {"u", "v", "w", "s", "y", "z"}) {
      pre += std::string(round, '\'');
      const Naming trial{pre, indexed};
      bool clash = false;
      for (std::size_t rel = 0; rel < steps.size() && !clash; ++rel) {
        for (std::size_t k = 1; k <= steps[rel] && !clash; ++k) {
          clash = std::find(taken.begin(), taken.end(), trial(rel, k)) != taken.end();
        }
      }
      if (!clash) return trial;
    }
  }
}

Naming choose_naming(const Presentation& p) {
  std::vector<std::size_t> steps;
  std::size_t long_relators = 0;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    steps.push_back((p.relator(i).size() - 4) / 2);
    if (steps.back() > 0) ++long_relators;
  }
  return fresh_naming(p.alphabet().names(), long_relators > 1, steps);
}

// Generator layout shared by replay and search: source generators, then
// for each relator in order its new generators in creation order.
struct Layout {
  std::vector<std::size_t> first_new;  // per relator
  std::vector<std::size_t> steps;      // per relator
  std::size_t total = 0;
};

Layout make_layout(const Presentation& p) {
  Layout lay;
  std::size_t next = p.rank();
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    lay.first_new.push_back(next);
    lay.steps.push_back((p.relator(i).size() - 4) / 2);
    next += lay.steps.back();
  }
  lay.total = next;
  return lay;
}

SquarifiedPresentation assemble(const Presentation& p, const Naming& naming, const Layout& lay,
                                const std::vector<Substitution>& subs,
                                const std::vector<std::vector<Letter>>& finals,
                                const Schedule& schedule) {
  std::vector<std::string> names = p.alphabet().names();
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    for (std::size_t k = 1; k <= lay.steps[i]; ++k) names.push_back(naming(i, k));
  }
  Presentation out{Alphabet(names)};
  std::vector<Substitution> named = subs;
  for (auto& s : named) {
    s.new_gen = names[s.gen];
  }
  // Per relator: its substitution relators, then the final short relator.
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    for (const auto& s : named) {
      if (s.relator == i) out.add_relator(s.relator_word());
    }
    out.add_relator(Word::from_reduced(finals[i]));
  }
  std::vector<Word> base;
  for (std::size_t g = 0; g < p.rank(); ++g) base.push_back(Word{gen_letter(g)});
  return SquarifiedPresentation{std::move(out), std::move(named), schedule, p, std::move(base)};
}

// Counts of 2-letter subwords among finished length-4 relators.
class PairLedger {
 public:
  // Adds every cyclic pair of w and w^-1; true if no count exceeds one.
  bool add(const std::array<Letter, 4>& w) {
    bool clean = true;
    for_each_pair(w, [&](std::uint64_t key) {
      if (++counts_[key] > 1) clean = false;
    });
    return clean;
  }
  void remove(const std::array<Letter, 4>& w) {
    for_each_pair(w, [&](std::uint64_t key) {
      if (--counts_[key] == 0) counts_.erase(key);
    });
  }

 private:
  template <typename F>
  static void for_each_pair(const std::array<Letter, 4>& w, F f) {
    for (std::size_t k = 0; k < 4; ++k) {
      const Letter x = w[k], y = w[(k + 1) % 4];
      f(key(x, y));
      f(key(y.inverse(), x.inverse()));
    }
  }
  static std::uint64_t key(Letter x, Letter y) {
    return (static_cast<std::uint64_t>(x.code()) << 32) | y.code();
  }
  std::map<std::uint64_t, int> counts_;
};

std::array<Letter, 4> as_square(const std::vector<Letter>& w) { return {w[0], w[1], w[2], w[3]}; }

class Searcher {
 public:
  Searcher(const Presentation& p, std::size_t bound)
      : p_(p), bound_(bound), naming_(choose_naming(p)), lay_(make_layout(p)) {
    finals_.resize(p.relator_count());
    schedule_.resize(p.relator_count());
  }

  SquarifySearch run() {
    descend(0);
    return std::move(out_);
  }

 private:
  // Returns true when the search should stop (found or out of budget).
  bool descend(std::size_t rel) {
    if (rel == p_.relator_count()) return leaf();
    const Word& r = p_.relator(rel);
    return shorten(rel, std::vector<Letter>(r.begin(), r.end()), 0);
  }

  bool shorten(std::size_t rel, const std::vector<Letter>& working, std::size_t step) {
    if (working.size() == 4) {
      const auto sq = as_square(working);
      const bool clean = ledger_.add(sq);
      bool stop = false;
      if (clean) {
        finals_[rel] = working;
        stop = descend(rel + 1);
      }
      ledger_.remove(sq);
      return stop;
    }
    const auto u = static_cast<std::uint32_t>(lay_.first_new[rel] + step);
    for (std::size_t c = 0; c < working.size(); ++c) {
      Cut cut = apply_cut(working, c, u);
      cut.sub.relator = rel;
      const Word def = cut.sub.relator_word();
      const auto sq = as_square(std::vector<Letter>(def.begin(), def.end()));
      const bool clean = ledger_.add(sq);
      bool stop = false;
      if (clean) {
        subs_.push_back(cut.sub);
        schedule_[rel].push_back(c);
        stop = shorten(rel, cut.next, step + 1);
        schedule_[rel].pop_back();
        subs_.pop_back();
      }
      ledger_.remove(sq);
      if (stop) return true;
    }
    return false;
  }

  bool leaf() {
    if (out_.leaves >= bound_) {
      out_.bound_reached = true;
      return true;
    }
    ++out_.leaves;
    SquarifiedPresentation sq = assemble(p_, naming_, lay_, subs_, finals_, schedule_);
    if (npc_check(sq.presentation).pass) {
      out_.result = std::move(sq);
      return true;
    }
    return false;
  }

  const Presentation& p_;
  std::size_t bound_;
  Naming naming_;
  Layout lay_;
  PairLedger ledger_;
  std::vector<Substitution> subs_;
  std::vector<std::vector<Letter>> finals_;
  Schedule schedule_;
  SquarifySearch out_;
};

}  // namespace

SquarifiedPresentation template_squarify(const RewriteResult& rw) {
  const Word& w = rw.w;
  const std::size_t len = w.size();
  if (len % 2 != 0) throw ParityError("relator has odd length " + std::to_string(len));
  if (rw.l < 2) throw PreconditionError("need l >= 2, got " + std::to_string(rw.l));
  const std::size_t n = len / 2;
  if (n < 3) throw TemplateMismatch("relator too short for the template", len + 1);

  const auto l = static_cast<std::uint32_t>(rw.l);
  auto expect = [&](std::size_t pos, Letter want) {
    if (w[pos - 1] != want) throw TemplateMismatch("unexpected letter", pos);
  };
  for (Letter x : w) {
    if (x.gen() > l) throw TemplateMismatch("letter index exceeds l", 1);
  }
  expect(1, inv_letter(l));
  expect(2, inv_letter(0));
  expect(n, inv_letter(0));
  expect(n + 1, gen_letter(l));
  expect(n + 2, gen_letter(0));
  expect(2 * n, gen_letter(0));
  for (std::size_t pos = 3; pos <= 2 * n - 1; ++pos) {
    if (pos >= n && pos <= n + 2) continue;
    const std::uint32_t g = w[pos - 1].gen();
    if (g < 1 || g > l - 1) throw TemplateMismatch("letter outside a_1..a_{l-1}", pos);
  }

  // Output alphabet: t, a_0..a_l, u_1..u_{n-2}.
  std::vector<std::string> names{rw.stable};
  const Alphabet a_names = rewrite_alphabet(rw.base, rw.l);
  names.insert(names.end(), a_names.names().begin(), a_names.names().end());
  const Naming u = fresh_naming(names, false, {n - 2});
  for (std::size_t k = 1; k <= n - 2; ++k) names.push_back(u(0, k));

  const Letter t = gen_letter(0);
  auto a = [](std::uint32_t i) { return gen_letter(i + 1); };
  auto x = [&](std::size_t pos) {
    const Letter src = w[pos - 1];
    return Letter(src.gen() + 1, src.sign());
  };
  const std::uint32_t first_u = l + 2;

  Presentation out{Alphabet(names)};
  for (std::uint32_t i = 1; i <= l; ++i) {
    out.add_relator(Word{t, a(i - 1), t.inverse(), a(i).inverse()});
  }
  std::vector<Substitution> subs;
  subs.push_back(Substitution{names[first_u], first_u, a(0).inverse(), a(l), a(0), 0});
  for (std::size_t k = 2; k <= n - 2; ++k) {
    const auto g = static_cast<std::uint32_t>(first_u + k - 1);
    subs.push_back(Substitution{names[g], g, x(n - k + 1), gen_letter(g - 1), x(n + k + 1), 0});
  }
  for (const auto& s : subs) out.add_relator(s.relator_word());
  out.add_relator(Word{a(l).inverse(), a(0).inverse(), gen_letter(first_u + n - 3), a(0)});

  Schedule schedule(1);
  schedule[0].push_back(n - 1);
  for (std::size_t k = 2; k <= n - 2; ++k) schedule[0].push_back(2 * n - 2 * (k - 1) - 1);

  Presentation source = rw.source ? *rw.source
                                  : Presentation(at_alphabet(rw.base, rw.stable),
                                                 {expand_to_at(rw.w)});
  const std::size_t src_a = source.alphabet().index(rw.base);
  const std::size_t src_t = source.alphabet().index(rw.stable);
  std::vector<Word> base{Word{gen_letter(src_t)}};
  for (std::uint32_t i = 0; i <= l; ++i) {
    const Word ti = Word{gen_letter(src_t)}.power(i);
    base.push_back(ti * Word{gen_letter(src_a)} * ti.inverse());
  }
  return SquarifiedPresentation{std::move(out), std::move(subs), std::move(schedule),
                                std::move(source), std::move(base)};
}

VerifyReport verify_substitutions(const SquarifiedPresentation& sq) {
  const Presentation& p = sq.presentation;
  const std::size_t fixed = sq.base_images.size();
  if (fixed + sq.substitutions.size() != p.rank()) {
    return {false, "generator count does not match base images plus substitutions", {}};
  }
  std::vector<std::optional<Word>> image(p.rank());
  for (std::size_t g = 0; g < fixed; ++g) image[g] = sq.base_images[g];

  auto map_letter = [&](Letter x) -> std::optional<Word> {
    if (x.gen() >= image.size() || !image[x.gen()]) return std::nullopt;
    return x.positive() ? *image[x.gen()] : image[x.gen()]->inverse();
  };
  for (const auto& s : sq.substitutions) {
    if (s.gen >= image.size() || image[s.gen]) {
      return {false, "substitution for '" + s.new_gen + "' reuses a generator", {}};
    }
    Word acc;
    for (Letter x : {s.left, s.mid, s.right}) {
      auto m = map_letter(x);
      if (!m) return {false, "substitution for '" + s.new_gen + "' uses an undefined letter", {}};
      acc *= *m;
    }
    image[s.gen] = std::move(acc);
  }

  std::vector<bool> covered(sq.source.relator_count(), false);
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    const Word& r = p.relator(i);
    if (r.size() != 4 || !r.is_cyclically_reduced()) {
      return {false, "relator " + std::to_string(i) + " is not a cyclically reduced square", r};
    }
    Word back;
    for (Letter x : r) back *= *map_letter(x);
    if (back.empty()) continue;
    bool matched = false;
    for (std::size_t j = 0; j < sq.source.relator_count(); ++j) {
      const Word& src = sq.source.relator(j);
      if (is_conjugate(back, src) || is_conjugate(back, src.inverse())) {
        covered[j] = true;
        matched = true;
      }
    }
    if (!matched) {
      return {false, "relator " + std::to_string(i) + " maps to no source relator", back};
    }
  }
  for (std::size_t j = 0; j < covered.size(); ++j) {
    if (!covered[j]) {
      return {false, "source relator " + std::to_string(j) + " is not recovered",
              sq.source.relator(j)};
    }
  }
  return {true, "", {}};
}

SquarifiedPresentation replay_schedule(const Presentation& p, const Schedule& schedule) {
  check_lengths(p);
  if (schedule.size() != p.relator_count()) {
    throw PreconditionError("schedule has " + std::to_string(schedule.size()) +
                            " entries for " + std::to_string(p.relator_count()) + " relators");
  }
  const Naming naming = choose_naming(p);
  const Layout lay = make_layout(p);
  std::vector<Substitution> subs;
  std::vector<std::vector<Letter>> finals(p.relator_count());
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (schedule[i].size() != lay.steps[i]) {
      throw PreconditionError("relator " + std::to_string(i) + " needs " +
                              std::to_string(lay.steps[i]) + " cuts, schedule has " +
                              std::to_string(schedule[i].size()));
    }
    std::vector<Letter> working(p.relator(i).begin(), p.relator(i).end());
    for (std::size_t k = 0; k < schedule[i].size(); ++k) {
      const std::size_t c = schedule[i][k];
      if (c >= working.size()) {
        throw PreconditionError("cut " + std::to_string(c) + " out of range for length " +
                                std::to_string(working.size()));
      }
      Cut cut = apply_cut(working, c, static_cast<std::uint32_t>(lay.first_new[i] + k));
      cut.sub.relator = i;
      subs.push_back(cut.sub);
      working = std::move(cut.next);
    }
    finals[i] = std::move(working);
  }
  return assemble(p, naming, lay, subs, finals, schedule);
}

SquarifySearch general_squarify_search(const Presentation& p, std::size_t leaf_bound) {
  check_lengths(p);
  return Searcher(p, leaf_bound).run();
}

}  // namespace sqhnn
