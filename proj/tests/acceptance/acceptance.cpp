// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. A criterion that overruns its time budget fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "oracles.hpp"
#include "sqhnn/bns.hpp"
#include "sqhnn/cancel.hpp"
#include "sqhnn/errors.hpp"
#include "sqhnn/hnn.hpp"
#include "sqhnn/npc.hpp"
#include "sqhnn/squarify.hpp"
#include "sqhnn/text.hpp"
#include "support.hpp"

#ifndef SQHNN_TEST_DATA_DIR
#define SQHNN_TEST_DATA_DIR "tests/data"
#endif

using namespace sqhnn;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << "[failed: " << what << "] ";
    }
  }
  void note(const std::string& s) { notes << s << "; "; }
};

const char* kR8Display =
    "t^8 a^-1 t^-8 a^-1 t^7 a t^-6 a t^5 a t^-4 a t^3 a t^-2 a t a t^-4 a^-1 t^8 a t^-8 a "
    "t^7 a^-1 t^-6 a^-1 t^5 a^-1 t^-4 a^-1 t^3 a^-1 t^-2 a^-1 t a^-1 t^-4 a";

const Endomorphism& phi() {
  static const Endomorphism f = parse_endomorphism("a -> a b^-1 a^2 b, b -> b a^-1 b^2 a");
  return f;
}
const Endomorphism& sapir() {
  static const Endomorphism f = parse_endomorphism("a -> a b, b -> b a");
  return f;
}

void relator_reproduction(Outcome& o) {
  const Word built = expand_to_at(build_r_l(8));
  const Word displayed = parse_word(kR8Display, at_alphabet());
  o.check(built.size() == 116, "length " + std::to_string(built.size()));
  o.check(displayed.size() == 116, "displayed length " + std::to_string(displayed.size()));
  o.check(built == displayed, "letters differ from the displayed relator");
  o.note("length " + std::to_string(built.size()));
}

void piece_count(Outcome& o) {
  const Presentation g = r_l_presentation(8);
  const PieceReport fast = max_piece(g);
  const PieceReport slow = piece_oracle(g);
  o.check(fast.max_piece == 17, "max_piece " + std::to_string(fast.max_piece));
  o.check(slow.max_piece == 17, "piece_oracle " + std::to_string(slow.max_piece));
  o.check(c_prime(fast, 1, 6), "C'(1/6)");
  o.check(17 * 6 < 116, "17 < 116/6");
  o.note("max piece " + std::to_string(fast.max_piece) + " (oracle " +
         std::to_string(slow.max_piece) + ") of 116");
}

void template_instance(Outcome& o) {
  const SquarifiedPresentation sq = template_squarify(t_rewrite(r_l_presentation(8)));
  const Presentation& q = sq.presentation;
  o.check(q.rank() == 18, std::to_string(q.rank()) + " generators");
  o.check(q.relator_count() == 17, std::to_string(q.relator_count()) + " relators");
  for (std::size_t i = 0; i < q.relator_count(); ++i) {
    o.check(q.relator(i).size() == 4, "relator " + std::to_string(i) + " length");
  }
  const NpcReport r = npc_check(q);
  o.check(r.condition1 && r.condition2, "conditions (1)/(2)");
  o.check(r.girth.has_value() && *r.girth >= 4, "girth");
  o.check(r.consistent, "criteria disagree");
  o.check(r.pass, "npc_check");
  const auto g = oracle::link_girth(q);
  o.check(g == r.girth, "oracle girth");
  o.note("18 generators, 17 squares, girth " + (r.girth ? std::to_string(*r.girth) : "inf"));
}

Word random_filling(std::mt19937_64& rng, std::size_t l, std::size_t n) {
  std::vector<Letter> out{inv_letter(static_cast<std::uint32_t>(l)), inv_letter(0)};
  auto run = [&](std::size_t count) {
    for (std::size_t k = 0; k < count;) {
      const Letter x(1 + static_cast<std::uint32_t>(rng() % (l - 1)), rng() % 2 ? -1 : 1);
      if (out.back().cancels(x)) continue;
      out.push_back(x);
      ++k;
    }
  };
  run(n - 3);
  out.push_back(inv_letter(0));
  out.push_back(gen_letter(static_cast<std::uint32_t>(l)));
  out.push_back(gen_letter(0));
  run(n - 3);
  out.push_back(gen_letter(0));
  return Word::from_reduced(out);
}

void template_sweep(Outcome& o) {
  std::mt19937_64 rng(20240601);
  const std::size_t ls[] = {2, 4, 6, 8};
  std::size_t good = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t l = ls[trial % 4];
    const std::size_t n = 3 + static_cast<std::size_t>(rng() % (l + 6));
    RewriteResult rw;
    rw.l = l;
    rw.w = random_filling(rng, l, n);
    try {
      const SquarifiedPresentation sq = template_squarify(rw);
      const NpcReport r = npc_check(sq.presentation);
      const bool ok = sq.presentation.rank() == l + n && sq.presentation.relator_count() == l + n - 1 &&
                      r.pass && r.consistent && verify_substitutions(sq).ok;
      o.check(ok, format_word(rw.w, rewrite_alphabet("a", l)));
      good += ok;
    } catch (const std::exception& e) {
      o.check(false, e.what());
    }
  }
  o.note(std::to_string(good) + "/200 fillings NPC");
}

void phi_torus_squarification(Outcome& o) {
  const Presentation torus = mapping_torus(phi());
  const SquarifySearch s = general_squarify_search(torus);
  o.check(s.result.has_value(), "no NPC squarification within the default budget");
  if (s.result) {
    const NpcReport r = npc_check(s.result->presentation);
    o.check(r.pass && r.consistent, "result not NPC");
    o.check(verify_substitutions(*s.result).ok, "back substitution");
    o.note(std::to_string(s.result->presentation.rank()) + " generators, " +
           std::to_string(s.result->presentation.relator_count()) + " squares after " +
           std::to_string(s.leaves) + " leaves");
  }
  bool parity = false;
  try {
    general_squarify_search(mapping_torus(sapir()));
  } catch (const ParityError&) {
    parity = true;
  }
  o.check(parity, "Sapir torus did not raise a parity error");
  o.note("Sapir torus: parity error");
}

void brown(Outcome& o) {
  const Presentation g = r_l_presentation(8);
  std::size_t asc = 0, fib = 0, axes = 0;
  for (const auto& r : sweep(g, 5)) {
    const long long x = r.chi.first, y = r.chi.second;
    const std::string ray = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    if (x == 0 || y == 0) {
      o.check(r.pair_verdict != PairVerdict::kFibered, "axis " + ray + " fibered");
      ++axes;
    } else if (std::abs(x) == 1 && std::abs(y) == 1) {
      o.check(r.pair_verdict == PairVerdict::kStrictlyAscending, ray + " " + to_string(r.pair_verdict));
      ++asc;
    } else {
      o.check(r.pair_verdict == PairVerdict::kFibered, ray + " " + to_string(r.pair_verdict));
      ++fib;
    }
  }
  o.check(asc == 4 && axes == 4, "ray counts");
  const Presentation bs = parse_presentation("< a, t | t a t^-1 a^-2 >");
  const auto rays = sweep(bs, 5);
  o.check(rays.size() == 2, "BS(1,2) valid rays " + std::to_string(rays.size()));
  for (const auto& r : rays) {
    o.check(r.pair_verdict == PairVerdict::kStrictlyAscending, "BS(1,2) " + to_string(r.pair_verdict));
  }
  o.note(std::to_string(asc) + " strictly ascending, " + std::to_string(fib) + " fibered, " +
         std::to_string(axes) + " axis rays; BS(1,2) strictly ascending");
}

std::string torsion_text(const std::vector<BigInt>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].str();
  return s + "]";
}

void abelian(Outcome& o) {
  const auto r8 = abelianization(r_l_presentation(8));
  o.check(r8.betti == 2 && r8.torsion.empty(), "l=8 group");
  const Presentation thm = mapping_torus(phi());
  const auto lib = abelianization(thm);
  const auto ref = oracle::abelianization(thm);
  o.check(lib.betti == 1 && lib.torsion == std::vector<BigInt>{2, 2}, "phi torus group");
  o.check(ref.betti == lib.betti && ref.torsion == lib.torsion, "phi torus oracle disagrees");
  const auto s_lib = abelianization(mapping_torus(sapir()));
  const auto s_ref = oracle::abelianization(mapping_torus(sapir()));
  o.check(s_lib.betti == 1 && s_ref.betti == 1, "Sapir group");
  o.note("l=8: betti 2; phi torus: betti " + std::to_string(lib.betti) + " torsion " +
         torsion_text(lib.torsion) + " (oracle " + torsion_text(ref.torsion) + "); Sapir: betti " +
         std::to_string(s_lib.betti) + " torsion " + torsion_text(s_lib.torsion));
}

void periodic(Outcome& o) {
  o.check(is_immersion(sapir()).is_immersion, "Sapir map not an immersion");
  o.check(is_immersion(phi()).is_immersion, "phi not an immersion");
  o.check(!periodic_conjugacy_search(sapir(), 8, 3), "Sapir witness");
  o.check(!periodic_conjugacy_search(phi(), 6, 2), "phi witness");
  const auto sq = periodic_conjugacy_search(parse_endomorphism("a -> a^2"), 1, 1);
  o.check(sq && sq->w.size() == 1 && sq->i == 1 && sq->j == 2, "a -> a^2 witness");
  o.note("no witness for Sapir (|w|<=8, i<=3) or phi (|w|<=6, i<=2); a -> a^2 gives (a,1,2)");
}

void fixed_word(Outcome& o) {
  FixedWordStream s(phi(), gen_letter(0));
  const Alphabet ab{"a", "b"};
  o.check(s.prefix(10) == parse_word("a b^-1 a^2 b a^-1 b^-2 a b^-1", ab), "first 10 letters");
  std::size_t len = 1;
  for (unsigned i = 0; i <= 6; ++i, len *= 5) {
    o.check(s.prefix(len) == power_iterate(phi(), i, parse_word("a", ab)),
            "prefix(5^" + std::to_string(i) + ")");
  }
  const PrefixScan scan = prefix_exponent_scan(s, 15625, 0);
  o.check(scan.zero_positions.empty(), "zero a-exponent prefix");
  for (std::size_t q = 1; q <= 3125; ++q) {
    if (scan.sums[5 * q - 1] != 3 * scan.sums[q - 1]) {
      o.check(false, "5q identity at q=" + std::to_string(q));
      break;
    }
  }
  o.note("a-exponent of prefixes in [" + std::to_string(scan.min) + ", " + std::to_string(scan.max) +
         "], no zero up to 15625");
}

void npc_equivalence(Outcome& o) {
  std::mt19937_64 rng(500500);
  std::size_t passing = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rank = 2 + rng() % 5;
    const std::size_t rels = 1 + rng() % 6;
    Presentation p(sqhnn::testing::letters_alphabet(rank));
    for (std::size_t i = 0; i < rels; ++i) p.add_relator(sqhnn::testing::cyclic_word(rng, rank, 4));
    const NpcReport r = npc_check(p);
    const auto g = oracle::link_girth(p);
    const bool girth_ok = !g || *g >= 4;
    o.check((r.condition1 && r.condition2) == girth_ok, format_presentation(p) + " (1)&(2) vs girth");
    o.check(r.condition1 == (max_piece(p).max_piece <= 1), format_presentation(p) + " (1) vs pieces");
    o.check(r.consistent, format_presentation(p) + " inconsistent");
    passing += r.pass;
  }
  o.note(std::to_string(passing) + "/500 NPC, all agree");
}

void genericity(Outcome& o) {
  std::ifstream in(std::string(SQHNN_TEST_DATA_DIR) + "/genericity_calibration.json");
  if (!in) {
    o.check(false, "calibration file missing");
    return;
  }
  const nlohmann::json cal = nlohmann::json::parse(in);
  const std::uint64_t seed = cal.at("seed").get<std::uint64_t>();
  const double threshold = cal.at("threshold").get<double>();
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  const GenericityResult big = genericity_experiment(2, 100, 200, seed, threads);
  const GenericityResult small = genericity_experiment(2, 6, 200, seed, threads);
  o.check(big.fraction_cprime16 > small.fraction_cprime16, "n=100 not above n=6");
  o.check(big.fraction_cprime16 >= threshold, "below calibrated threshold");
  std::ostringstream s;
  s << "seed " << seed << ": C'(1/6) fraction n=100 " << big.fraction_cprime16 << ", n=6 "
    << small.fraction_cprime16 << ", threshold " << threshold << "; pieces within +2 in "
    << big.count_piece_within_two << "/200";
  o.note(s.str());
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "l=8 relator reproduction", 0.1, relator_reproduction},
      {2, "piece count", 1, piece_count},
      {3, "square presentation for l=8", 0.1, template_instance},
      {4, "template filling sweep", 10, template_sweep},
      {5, "phi torus squarification", 60, phi_torus_squarification},
      {6, "Brown classification", 1, brown},
      {7, "abelianization", 0.1, abelian},
      {8, "immersion and periodic search", 120, periodic},
      {9, "fixed word", 5, fixed_word},
      {10, "NPC criterion equivalence", 30, npc_equivalence},
      {11, "genericity", 300, genericity},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.budget_seconds) {
      o.check(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds));
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << c.id << "  "
              << std::left << std::setw(32) << c.name << std::right << std::fixed
              << std::setprecision(3) << secs << " s  " << o.notes.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
