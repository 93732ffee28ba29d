#include "sqhnn/cancel.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sqhnn/errors.hpp"

namespace sqhnn {

SymmetrizedSet::SymmetrizedSet(const Presentation& p) {
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    cores_.push_back(p.relator(i));
    inverses_.push_back(p.relator(i).inverse());
    for (bool inv : {false, true}) {
      for (std::size_t k = 0; k < cores_.back().size(); ++k) {
        occurrences_.push_back(Occurrence{i, inv, k});
      }
    }
  }
}

Word SymmetrizedSet::word(const Occurrence& o) const {
  const Word& w = o.inverted ? inverses_[o.relator] : cores_[o.relator];
  return w.rotated(o.rotation);
}

Occurrence SymmetrizedSet::inverse(const Occurrence& o) const {
  const std::size_t n = cores_[o.relator].size();
  return Occurrence{o.relator, !o.inverted, (n - o.rotation) % n};
}

std::vector<Word> SymmetrizedSet::distinct_words() const {
  std::set<Word> words;
  for (const auto& o : occurrences_) words.insert(word(o));
  return {words.begin(), words.end()};
}

SymmetrizedSet symmetrize(const Presentation& p) { return SymmetrizedSet(p); }

namespace {

// Shared bookkeeping: given, for every occurrence, the longest piece that
// starts there, and the overall maximum with its witness, fill the report.
PieceReport assemble(const SymmetrizedSet& sym, const std::vector<std::size_t>& longest_at,
                     std::size_t best, std::optional<PieceWitness> witness) {
  PieceReport rep;
  rep.max_piece = best;
  rep.witness = std::move(witness);
  const std::size_t nrel = sym.relator_count();
  rep.relator_length.resize(nrel);
  rep.relator_max_piece.assign(nrel, 0);

  // Non-inverted occurrences of relator i are contiguous, rotation order.
  std::vector<std::vector<std::size_t>> at(nrel);
  for (std::size_t idx = 0; idx < sym.size(); ++idx) {
    const Occurrence& o = sym.occurrences()[idx];
    rep.relator_max_piece[o.relator] = std::max(rep.relator_max_piece[o.relator], longest_at[idx]);
    if (!o.inverted) at[o.relator].push_back(longest_at[idx]);
  }

  for (std::size_t i = 0; i < nrel; ++i) {
    const std::size_t n = sym.relator(i).size();
    rep.relator_length[i] = n;
    std::optional<std::size_t> fewest;
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t covered = 0, count = 0;
      bool ok = true;
      while (covered < n) {
        const std::size_t step = std::min(at[i][(s + covered) % n], n - covered);
        if (step == 0) {
          ok = false;
          break;
        }
        covered += step;
        ++count;
      }
      if (ok && (!fewest || count < *fewest)) fewest = count;
    }
    if (fewest && (!rep.c_p || *fewest < *rep.c_p)) rep.c_p = fewest;
  }
  return rep;
}

}  // namespace

PieceReport max_piece(const Presentation& p) {
  const SymmetrizedSet sym(p);
  const auto& occ = sym.occurrences();
  const std::size_t m = occ.size();

  // Sort occurrences by the word they spell; the longest common prefix of
  // any pair is the minimum over the adjacent pairs between them.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    const Occurrence &oa = occ[a], &ob = occ[b];
    const std::size_t la = sym.length(oa), lb = sym.length(ob);
    for (std::size_t k = 0; k < std::min(la, lb); ++k) {
      const Letter x = sym.letter(oa, k), y = sym.letter(ob, k);
      if (x != y) return x < y;
    }
    if (la != lb) return la < lb;
    return oa < ob;
  };
  std::sort(order.begin(), order.end(), less);

  // capped[j] = piece length shared by order[j] and order[j+1].
  std::vector<std::size_t> capped(m > 0 ? m - 1 : 0);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const Occurrence &oa = occ[order[j]], &ob = occ[order[j + 1]];
    const std::size_t la = sym.length(oa), lb = sym.length(ob);
    std::size_t k = 0;
    while (k < la && k < lb && sym.letter(oa, k) == sym.letter(ob, k)) ++k;
    if (k == la && la == lb) k = la - 1;  // same word, distinct occurrences
    capped[j] = k;
  }

  std::vector<std::size_t> longest_at(m, 0);
  std::size_t best = 0;
  for (std::size_t j = 0; j + 1 < m; ++j) {
    longest_at[order[j]] = std::max(longest_at[order[j]], capped[j]);
    longest_at[order[j + 1]] = std::max(longest_at[order[j + 1]], capped[j]);
    best = std::max(best, capped[j]);
  }

  std::optional<PieceWitness> witness;
  if (best > 0) {
    // Every pair inside a maximal run of adjacent values >= best realizes
    // best; the least pair of a run is its two smallest labels.
    std::optional<std::pair<Occurrence, Occurrence>> least;
    for (std::size_t j = 0; j < capped.size();) {
      if (capped[j] < best) {
        ++j;
        continue;
      }
      std::size_t e = j;
      while (e < capped.size() && capped[e] >= best) ++e;
      std::vector<Occurrence> run;
      for (std::size_t q = j; q <= e; ++q) run.push_back(occ[order[q]]);
      std::sort(run.begin(), run.end());
      std::pair<Occurrence, Occurrence> cand{run[0], run[1]};
      if (!least || cand < *least) least = cand;
      j = e;
    }
    Word piece = sym.word(least->first).subword(0, best);
    witness = PieceWitness{least->first, least->second, std::move(piece)};
  }
  return assemble(sym, longest_at, best, std::move(witness));
}

PieceReport piece_oracle(const Presentation& p) {
  const SymmetrizedSet sym(p);
  const auto& occ = sym.occurrences();
  if (occ.size() > kPieceOracleCap) {
    throw PreconditionError("piece_oracle: symmetrized set has " + std::to_string(occ.size()) +
                            " entries, cap is " + std::to_string(kPieceOracleCap));
  }
  std::vector<Word> words;
  words.reserve(occ.size());
  for (const auto& o : occ) words.push_back(sym.word(o));

  std::vector<std::size_t> longest_at(occ.size(), 0);
  std::size_t best = 0;
  std::optional<std::pair<Occurrence, Occurrence>> least;

  for (std::size_t a = 0; a < occ.size(); ++a) {
    // l1 = word(a)^-1; a piece starting at occurrence a is what cancels in
    // l1 * l2. Excluding l2 = l1^-1 as an occurrence means excluding b == a.
    const Word l1 = words[a].inverse();
    for (std::size_t b = 0; b < occ.size(); ++b) {
      if (b == a) continue;
      const Word& l2 = words[b];
      const Word prod = l1 * l2;
      std::size_t cancelled = (l1.size() + l2.size() - prod.size()) / 2;
      if (prod.empty() && l1.size() == l2.size()) cancelled = l1.size() - 1;
      longest_at[a] = std::max(longest_at[a], cancelled);
      if (cancelled == 0) continue;
      std::pair<Occurrence, Occurrence> pr = std::minmax(occ[a], occ[b]);
      if (cancelled > best || (cancelled == best && pr < *least)) {
        best = cancelled;
        least = pr;
      }
    }
  }

  std::optional<PieceWitness> witness;
  if (best > 0) {
    witness = PieceWitness{least->first, least->second, sym.word(least->first).subword(0, best)};
  }
  return assemble(sym, longest_at, best, std::move(witness));
}

bool c_prime(const PieceReport& rep, unsigned num, unsigned den) {
  if (num == 0 || den == 0) throw PreconditionError("c_prime needs a positive ratio");
  for (std::size_t i = 0; i < rep.relator_length.size(); ++i) {
    if (rep.relator_max_piece[i] * den >= rep.relator_length[i] * num) return false;
  }
  return true;
}

bool c_prime(const Presentation& p, unsigned num, unsigned den) {
  return c_prime(max_piece(p), num, den);
}

}  // namespace sqhnn
