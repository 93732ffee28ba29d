#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "sqhnn/bns.hpp"
#include "sqhnn/cancel.hpp"
#include "sqhnn/errors.hpp"
#include "sqhnn/hnn.hpp"
#include "sqhnn/npc.hpp"
#include "sqhnn/squarify.hpp"
#include "sqhnn/text.hpp"
#include "sqhnn/version.hpp"

namespace sqhnn::cli {

namespace {

struct Stage {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

class Runner {
 public:
  // fn returns a detail line; any exception marks the stage failed.
  void run(const std::string& name, const std::function<std::string()>& fn) {
    Stage s;
    s.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      s.detail = fn();
      s.pass = true;
    } catch (const std::exception& e) {
      s.detail = e.what();
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    stages_.push_back(std::move(s));
  }
  const std::vector<Stage>& stages() const { return stages_; }

 private:
  std::vector<Stage> stages_;
};

struct StageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw StageFailure(what);
}

Word read_relator(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  if (text.find('<') != std::string::npos) {
    const Presentation p = parse_presentation(text);
    if (p.alphabet() != at_alphabet() || p.relator_count() != 1) {
      throw Error("relator file must present <a, t | r>");
    }
    return p.relator_entry(0).original;
  }
  return parse_word(text, at_alphabet());
}

// Ray pairs of the l = 8 group: +-(1,1) and +-(1,-1) strictly ascending,
// the axes not fibered, every other ray fibered.
std::string check_r8_rays(const std::vector<BnsClassification>& rows) {
  std::size_t fibered = 0, ascending = 0, axes = 0;
  for (const auto& r : rows) {
    const long long x = r.chi.first, y = r.chi.second;
    const std::string ray = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    if ((x == 0) != (y == 0)) {
      require(r.pair_verdict != PairVerdict::kFibered, "axis ray " + ray + " classified fibered");
      ++axes;
    } else if ((x == 1 || x == -1) && (y == 1 || y == -1)) {
      require(r.pair_verdict == PairVerdict::kStrictlyAscending,
              "ray " + ray + " is " + to_string(r.pair_verdict));
      ++ascending;
    } else {
      require(r.pair_verdict == PairVerdict::kFibered,
              "ray " + ray + " is " + to_string(r.pair_verdict));
      ++fibered;
    }
  }
  return std::to_string(ascending) + " strictly ascending, " + std::to_string(fibered) +
         " fibered, " + std::to_string(axes) + " axis rays not fibered";
}

}  // namespace

int cmd_paper(const RunConfig& cfg, std::ostream& out) {
  const std::size_t l = cfg.l;
  const bool flagship = l == 8;
  Runner runner;

  const Word built = expand_to_at(build_r_l(l));
  Word relator = built;
  runner.run("relator", [&] {
    if (!cfg.relator_path.empty()) {
      relator = read_relator(cfg.relator_path);
      require(is_conjugate(relator, built) || is_conjugate(relator, built.inverse()),
              "relator file differs from the generated r_" + std::to_string(l));
    }
    if (flagship) require(built.size() == 116, "length " + std::to_string(built.size()));
    return "length " + std::to_string(relator.size());
  });
  const Presentation g(at_alphabet(), {relator});

  runner.run("pieces", [&] {
    const PieceReport r = max_piece(g);
    const PieceReport o = piece_oracle(g);
    require(r.max_piece == o.max_piece, "oracle disagrees: " + std::to_string(o.max_piece));
    if (flagship) require(r.max_piece == 17, "max piece " + std::to_string(r.max_piece));
    const bool small = c_prime(r, 1, 6);
    if (flagship) require(small, "C'(1/6) fails");
    return "max piece " + std::to_string(r.max_piece) + " / " + std::to_string(g.relator(0).size()) +
           (small ? ", C'(1/6) holds" : ", C'(1/6) fails");
  });

  runner.run("abelianization", [&] {
    const AbelianizationReport ab = abelianization(g);
    require(ab.betti == 2 && ab.torsion.empty(), "betti " + std::to_string(ab.betti));
    return std::string("betti 2, no torsion");
  });

  std::optional<SquarifiedPresentation> sq;
  runner.run("squarify", [&] {
    const RewriteResult rw = t_rewrite(g);
    sq = template_squarify(rw);
    const std::size_t n = rw.w.size() / 2;
    const Presentation& q = sq->presentation;
    require(q.rank() == rw.l + n, std::to_string(q.rank()) + " generators");
    require(q.relator_count() == rw.l + n - 1, std::to_string(q.relator_count()) + " relators");
    for (std::size_t i = 0; i < q.relator_count(); ++i) {
      require(q.relator(i).size() == 4, "relator " + std::to_string(i) + " is not a square");
    }
    const VerifyReport v = verify_substitutions(*sq);
    require(v.ok, "back substitution: " + v.diagnostic);
    return std::to_string(q.rank()) + " generators, " + std::to_string(q.relator_count()) +
           " square relators";
  });

  runner.run("npc", [&] {
    require(sq.has_value(), "no squarified presentation");
    const NpcReport r = npc_check(sq->presentation);
    require(r.consistent, "conditions and girth disagree");
    require(r.pass, "not non-positively curved");
    return "conditions (1), (2) hold, link girth " + std::to_string(*r.girth);
  });

  runner.run("bns", [&] {
    const auto rows = sweep(g, 5);
    if (flagship) return check_r8_rays(rows);
    std::size_t asc = 0;
    for (const auto& r : rows) asc += r.pair_verdict == PairVerdict::kStrictlyAscending;
    require(asc > 0, "no strictly ascending ray");
    return std::to_string(asc) + " strictly ascending rays of " + std::to_string(rows.size());
  });

  const Endomorphism phi = parse_endomorphism("a -> a b^-1 a^2 b, b -> b a^-1 b^2 a");
  const Presentation torus = mapping_torus(phi);

  runner.run("phi immersion", [&] {
    const ImmersionReport r = is_immersion(phi);
    require(r.is_immersion, "phi is not an immersion");
    return std::string("phi is an immersion");
  });

  runner.run("phi abelianization", [&] {
    const AbelianizationReport ab = abelianization(torus);
    require(ab.betti == 1, "betti " + std::to_string(ab.betti));
    require(ab.torsion == std::vector<BigInt>{2, 2}, "torsion differs from Z/2 x Z/2");
    return std::string("betti 1, torsion 2 2");
  });

  runner.run("phi squarify", [&] {
    const SquarifySearch s = general_squarify_search(torus);
    require(s.result.has_value(), "no NPC squarification within the leaf bound");
    require(verify_substitutions(*s.result).ok, "back substitution fails");
    return std::to_string(s.result->presentation.rank()) + " generators, " +
           std::to_string(s.result->presentation.relator_count()) + " relators after " +
           std::to_string(s.leaves) + " leaves";
  });

  runner.run("phi periodic search", [&] {
    require(!periodic_conjugacy_search(phi, 6, 2), "periodic conjugacy class found");
    return std::string("no witness up to |w| <= 6, i <= 2");
  });

  runner.run("phi fixed word", [&] {
    FixedWordStream s(phi, gen_letter(0));
    const PrefixScan scan = prefix_exponent_scan(s, 15625, 0);
    if (!scan.zero_positions.empty()) {
      throw StageFailure("prefix of length " + std::to_string(scan.zero_positions.front()) +
                         " has zero exponent in a");
    }
    return "no zero a-exponent prefix up to 15625, min " + std::to_string(scan.min);
  });

  bool all = true;
  for (const auto& s : runner.stages()) all = all && s.pass;

  if (cfg.format == Format::kJson) {
    Json j;
    j["tool"] = "sqhnn";
    j["version"] = kVersion;
    j["schema"] = 1;
    j["config"] = config_json(cfg);
    Json arr = Json::array();
    for (const auto& s : runner.stages()) {
      arr.push_back(Json{{"stage", s.name}, {"pass", s.pass}, {"detail", s.detail}});
    }
    j["stages"] = arr;
    j["pass"] = all;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& s : runner.stages()) {
      out << (s.pass ? "PASS " : "FAIL ") << std::left << std::setw(22) << s.name << std::right
          << s.detail << "  [" << std::fixed << std::setprecision(3) << s.seconds << " s]\n";
    }
    out << (all ? "all stages pass" : "some stages FAILED") << "\n";
  }
  return all ? kPass : kFail;
}

}  // namespace sqhnn::cli
