#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

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

std::string format_name(Format f) {
  switch (f) {
    case Format::kText: return "text";
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
  }
  return "text";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string input_text(const RunConfig& cfg) {
  return cfg.input_path.empty() ? cfg.inline_input : read_file(cfg.input_path);
}

Presentation input_presentation(const RunConfig& cfg) { return parse_presentation(input_text(cfg)); }
Endomorphism input_map(const RunConfig& cfg) { return parse_endomorphism(input_text(cfg)); }

Json envelope(const RunConfig& cfg) {
  Json j;
  j["tool"] = "sqhnn";
  j["version"] = kVersion;
  j["schema"] = 1;
  j["config"] = config_json(cfg);
  return j;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string letter_name(Letter x, const Alphabet& alphabet) {
  return alphabet.name(x.gen()) + (x.positive() ? "" : "^-1");
}

Json big_list(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json presentation_json(const Presentation& p) {
  Json rels = Json::array();
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    rels.push_back(format_word(p.relator(i), p.alphabet()));
  }
  return Json{{"generators", p.alphabet().names()}, {"relators", rels},
              {"text", format_presentation(p)}};
}

Json occurrence_json(const Occurrence& o) {
  return Json{{"relator", o.relator}, {"inverted", o.inverted}, {"rotation", o.rotation}};
}

std::pair<unsigned, unsigned> parse_ratio(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument(s);
    const unsigned long num = std::stoul(s.substr(0, slash));
    const unsigned long den = std::stoul(s.substr(slash + 1));
    if (num == 0 || den == 0) throw std::invalid_argument(s);
    return {static_cast<unsigned>(num), static_cast<unsigned>(den)};
  } catch (const std::logic_error&) {
    throw Error("ratio must look like 1/6, got '" + s + "'");
  }
}

Schedule read_schedule(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error("schedule file '" + path + "': " + e.what());
  }
  const Json& cuts = j.contains("schedule") ? j["schedule"] : j;
  Schedule s;
  try {
    for (const auto& rel : cuts) s.push_back(rel.get<std::vector<std::size_t>>());
  } catch (const Json::exception& e) {
    throw Error("schedule file '" + path + "': " + e.what());
  }
  return s;
}

Json squarified_json(const SquarifiedPresentation& sq) {
  const Alphabet& names = sq.presentation.alphabet();
  Json subs = Json::array();
  for (const auto& s : sq.substitutions) {
    subs.push_back(Json{{"new_gen", s.new_gen},
                        {"definition", format_word(s.definition(), names)},
                        {"source_relator", s.relator}});
  }
  return Json{{"presentation", presentation_json(sq.presentation)},
              {"substitutions", subs},
              {"schedule", sq.schedule},
              {"source", presentation_json(sq.source)}};
}

Json npc_json(const NpcReport& r, const Alphabet& alphabet) {
  Json v = Json::array();
  for (const auto& viol : r.violations) {
    Json words = Json::array();
    for (const auto& w : viol.words) words.push_back(format_word(w, alphabet));
    v.push_back(Json{{"kind", to_string(viol.kind)}, {"words", words}, {"detail", viol.detail}});
  }
  return Json{{"pass", r.pass},
              {"condition1", r.condition1},
              {"condition2", r.condition2},
              {"girth", r.girth ? Json(*r.girth) : Json(nullptr)},
              {"consistent", r.consistent},
              {"violations", v}};
}

}  // namespace

Json config_json(const RunConfig& c) {
  return Json{{"subcommand", c.subcommand},
              {"input", c.inline_input},
              {"input_path", c.input_path},
              {"format", format_name(c.format)},
              {"seed", c.seed ? Json(*c.seed) : Json(nullptr)},
              {"gens", c.gens},
              {"stable", c.stable},
              {"template", c.use_template},
              {"leaf_bound", c.leaf_bound},
              {"schedule_path", c.schedule_path},
              {"dot_path", c.dot_path},
              {"ratio", c.ratio},
              {"chi", c.chi},
              {"sweep", c.sweep},
              {"max_len", c.max_len},
              {"max_iter", c.max_iter},
              {"letters", c.letters},
              {"gen", c.gen},
              {"k", c.k},
              {"n", c.n},
              {"trials", c.trials},
              {"threads", c.threads},
              {"l", c.l},
              {"relator_path", c.relator_path}};
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> names;
  std::stringstream ss(cfg.gens);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (!tok.empty()) names.push_back(tok);
  }
  if (names.empty()) throw Error("--gens needs at least one generator");
  const Alphabet alphabet(names);
  const Word w = parse_word(input_text(cfg), alphabet);
  const CyclicReduction cr = cyclic_reduce(w);
  if (cfg.format == Format::kJson) {
    Json j = envelope(cfg);
    j["reduced"] = format_word(w, alphabet);
    j["length"] = w.size();
    j["cyclic_core"] = format_word(cr.core.core(), alphabet);
    j["conjugator"] = format_word(cr.conjugator, alphabet);
    Json sums;
    for (std::size_t g = 0; g < alphabet.size(); ++g) sums[alphabet.name(g)] = exponent_sum(w, g);
    j["exponent_sums"] = sums;
    emit_json(out, j);
  } else {
    out << "reduced     " << format_word(w, alphabet) << "  (length " << w.size() << ")\n"
        << "cyclic core " << format_word(cr.core.core(), alphabet) << "\n"
        << "conjugator  " << format_word(cr.conjugator, alphabet) << "\n";
  }
  return kPass;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = input_presentation(cfg);
  const AbelianizationReport ab = abelianization(p);
  if (cfg.format == Format::kJson) {
    Json j = envelope(cfg);
    j["betti"] = ab.betti;
    j["torsion"] = big_list(ab.torsion);
    emit_json(out, j);
  } else {
    out << "betti " << ab.betti << "\ntorsion";
    if (ab.torsion.empty()) out << " none";
    for (const auto& t : ab.torsion) out << " " << t;
    out << "\n";
  }
  return kPass;
}

int cmd_rewrite(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = input_presentation(cfg);
  const RewriteResult rw =
      t_rewrite(p, cfg.stable.empty() ? std::nullopt : std::optional<std::string>(cfg.stable));
  const Alphabet names = rewrite_alphabet(rw.base, rw.l);
  if (cfg.format == Format::kJson) {
    Json j = envelope(cfg);
    j["l"] = rw.l;
    j["w"] = format_word(rw.w, names);
    j["length"] = rw.w.size();
    j["base"] = rw.base;
    j["stable"] = rw.stable;
    j["min_height"] = rw.min_height;
    emit_json(out, j);
  } else {
    out << "stable " << rw.stable << ", base " << rw.base << ", l = " << rw.l
        << ", min height " << rw.min_height << "\n"
        << "w = " << format_word(rw.w, names) << "  (length " << rw.w.size() << ")\n";
  }
  return kPass;
}

int cmd_squarify(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = input_presentation(cfg);
  std::optional<SquarifiedPresentation> sq;
  std::size_t leaves = 0;
  bool bound_reached = false;
  std::string mode;
  if (!cfg.schedule_path.empty()) {
    mode = "replay";
    sq = replay_schedule(p, read_schedule(cfg.schedule_path));
  } else if (cfg.use_template) {
    mode = "template";
    sq = template_squarify(
        t_rewrite(p, cfg.stable.empty() ? std::nullopt : std::optional<std::string>(cfg.stable)));
  } else {
    mode = "search";
    SquarifySearch s = general_squarify_search(p, cfg.leaf_bound);
    sq = std::move(s.result);
    leaves = s.leaves;
    bound_reached = s.bound_reached;
  }

  std::optional<NpcReport> npc;
  std::optional<VerifyReport> verify;
  if (sq) {
    npc = npc_check(sq->presentation);
    verify = verify_substitutions(*sq);
  }
  const bool ok = sq && npc->pass && verify->ok;

  if (cfg.format == Format::kJson) {
    Json j = envelope(cfg);
    j["mode"] = mode;
    j["found"] = sq.has_value();
    if (mode == "search") {
      j["leaves"] = leaves;
      j["bound_reached"] = bound_reached;
    }
    if (sq) {
      j["result"] = squarified_json(*sq);
      j["npc"] = npc_json(*npc, sq->presentation.alphabet());
      j["verified"] = verify->ok;
      if (!verify->ok) j["verify_diagnostic"] = verify->diagnostic;
    }
    emit_json(out, j);
  } else if (!sq) {
    out << "no NPC squarification within " << leaves << " leaves"
        << (bound_reached ? " (bound reached)" : " (search space exhausted)") << "\n";
  } else {
    const Presentation& q = sq->presentation;
    out << format_presentation(q) << "\n"
        << q.rank() << " generators, " << q.relator_count() << " relators\n";
    for (const auto& s : sq->substitutions) {
      out << "  " << s.new_gen << " = " << format_word(s.definition(), q.alphabet()) << "\n";
    }
    out << "schedule";
    for (const auto& cuts : sq->schedule) {
      out << " [";
      for (std::size_t k = 0; k < cuts.size(); ++k) out << (k ? " " : "") << cuts[k];
      out << "]";
    }
    out << "\nnpc " << (npc->pass ? "pass" : "fail") << ", substitutions "
        << (verify->ok ? "verified" : "NOT verified: " + verify->diagnostic) << "\n";
    if (mode == "search") out << "leaves visited " << leaves << "\n";
  }
  return ok ? kPass : kFail;
}

int cmd_npc_check(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = input_presentation(cfg);
  const NpcReport r = npc_check(p);
  if (!cfg.dot_path.empty()) {
    std::ofstream dot(cfg.dot_path);
    if (!dot) throw Error("cannot write '" + cfg.dot_path + "'");
    dot << link_to_dot(build_link(p), p.alphabet());
  }
  if (cfg.format == Format::kJson) {
    Json j = envelope(cfg);
    j["npc"] = npc_json(r, p.alphabet());
    emit_json(out, j);
  } else {
    out << (r.pass ? "pass" : "fail") << "\n"
        << "condition (1) " << (r.condition1 ? "holds" : "fails") << "\n"
        << "condition (2) " << (r.condition2 ? "holds" : "fails") << "\n"
        << "link girth    " << (r.girth ? std::to_string(*r.girth) : "infinite") << "\n";
    for (const auto& v : r.violations) {
      out << "  " << to_string(v.kind) << ":";
      for (const auto& w : v.words) out << " " << format_word(w, p.alphabet());
      out << " (" << v.detail << ")\n";
    }
  }
  return r.pass ? kPass : kFail;
}

int cmd_pieces(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = input_presentation(cfg);
  const auto [num, den] = parse_ratio(cfg.ratio);
  const PieceReport r = max_piece(p);
  const bool holds = c_prime(r, num, den);
  if (cfg.format == Format::kJson) {
    Json j = envelope(cfg);
    j["max_piece"] = r.max_piece;
    j["relator_length"] = r.relator_length;
    j["relator_max_piece"] = r.relator_max_piece;
    j["c_p"] = r.c_p ? Json(*r.c_p) : Json(nullptr);
    if (r.witness) {
      j["witness"] = Json{{"first", occurrence_json(r.witness->first)},
                          {"second", occurrence_json(r.witness->second)},
                          {"piece", format_word(r.witness->piece, p.alphabet())}};
    }
    j["c_prime"] = Json{{"ratio", cfg.ratio}, {"holds", holds}};
    emit_json(out, j);
  } else {
    for (std::size_t i = 0; i < r.relator_length.size(); ++i) {
      out << "relator " << i << ": longest piece " << r.relator_max_piece[i] << " / "
          << r.relator_length[i] << "\n";
    }
    out << "max piece " << r.max_piece << "\n";
    if (r.witness) out << "witness " << format_word(r.witness->piece, p.alphabet()) << "\n";
    out << "C'(" << cfg.ratio << ") " << (holds ? "holds" : "fails") << "\n";
  }
  return holds ? kPass : kFail;
}

int cmd_bns(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = input_presentation(cfg);
  std::vector<BnsClassification> rows;
  if (cfg.sweep > 0) {
    if (!cfg.chi.empty()) throw Error("give either --chi or --sweep");
    rows = sweep(p, cfg.sweep);
  } else {
    if (cfg.chi.empty()) throw Error("bns needs --chi x,y or --sweep N");
    const auto comma = cfg.chi.find(',');
    long long x = 0, y = 0;
    try {
      if (comma == std::string::npos) throw std::invalid_argument(cfg.chi);
      std::size_t used = 0;
      x = std::stoll(cfg.chi.substr(0, comma), &used);
      y = std::stoll(cfg.chi.substr(comma + 1), &used);
    } catch (const std::logic_error&) {
      throw Error("--chi must look like 1,-1, got '" + cfg.chi + "'");
    }
    rows.push_back(brown_classify(p, Character{x, y}));
  }
  const std::string g0 = p.alphabet().name(0), g1 = p.alphabet().name(1);
  if (cfg.format == Format::kJson) {
    Json j = envelope(cfg);
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back(Json{{"chi", {r.chi.first, r.chi.second}},
                         {"verdict", to_string(r.pair_verdict)},
                         {"chi_in_sigma", r.chi_in_sigma},
                         {"minus_chi_in_sigma", r.minus_chi_in_sigma}});
    }
    j["generators"] = {g0, g1};
    j["rays"] = arr;
    emit_json(out, j);
  } else if (cfg.format == Format::kCsv) {
    out << "chi_" << g0 << ",chi_" << g1 << ",verdict,chi_in_sigma,minus_chi_in_sigma\n";
    for (const auto& r : rows) {
      out << r.chi.first << "," << r.chi.second << "," << to_string(r.pair_verdict) << ","
          << r.chi_in_sigma << "," << r.minus_chi_in_sigma << "\n";
    }
  } else {
    out << "chi(" << g0 << ") chi(" << g1 << ")  verdict             in Sigma  -chi in Sigma\n";
    for (const auto& r : rows) {
      out << std::setw(6) << r.chi.first << " " << std::setw(6) << r.chi.second << "  "
          << std::left << std::setw(20) << to_string(r.pair_verdict) << std::right
          << (r.chi_in_sigma ? "yes" : "no ") << "       " << (r.minus_chi_in_sigma ? "yes" : "no")
          << "\n";
    }
  }
  return kPass;
}

int cmd_immersion(const RunConfig& cfg, std::ostream& out) {
  const Endomorphism f = input_map(cfg);
  const ImmersionReport r = is_immersion(f);
  if (cfg.format == Format::kJson) {
    Json j = envelope(cfg);
    j["immersion"] = r.is_immersion;
    j["uniform_length"] = f.uniform_length();
    if (r.failure) {
      j["failure"] = {letter_name(r.failure->first, f.domain()),
                      letter_name(r.failure->second, f.domain())};
    }
    emit_json(out, j);
  } else if (r.is_immersion) {
    out << "immersion\n";
  } else {
    out << "not an immersion: image of " << letter_name(r.failure->first, f.domain()) << " "
        << letter_name(r.failure->second, f.domain()) << " cancels\n";
  }
  return r.is_immersion ? kPass : kFail;
}

int cmd_periodic_search(const RunConfig& cfg, std::ostream& out) {
  const Endomorphism f = input_map(cfg);
  const auto w = periodic_conjugacy_search(f, cfg.max_len, cfg.max_iter);
  if (cfg.format == Format::kJson) {
    Json j = envelope(cfg);
    j["witness"] = w ? Json{{"w", format_word(w->w.core(), f.domain())}, {"i", w->i}, {"j", w->j}}
                     : Json(nullptr);
    j["summary"] = w ? "periodic conjugacy class found" : "no witness up to bounds";
    emit_json(out, j);
  } else if (w) {
    out << "periodic conjugacy class: w = " << format_word(w->w.core(), f.domain())
        << ", i = " << w->i << ", j = " << w->j << "\n";
  } else {
    out << "no witness up to bounds (|w| <= " << cfg.max_len << ", i <= " << cfg.max_iter
        << ")\n";
  }
  return w ? kFail : kPass;
}

int cmd_prefix_scan(const RunConfig& cfg, std::ostream& out) {
  const Endomorphism f = input_map(cfg);
  const std::size_t g = f.domain().index(cfg.gen);
  FixedWordStream stream(f, gen_letter(0));
  const PrefixScan scan = prefix_exponent_scan(stream, cfg.letters, g);
  if (cfg.format == Format::kJson) {
    Json j = envelope(cfg);
    j["seed_letter"] = f.domain().name(0);
    j["min"] = scan.min;
    j["max"] = scan.max;
    j["zero_positions"] = scan.zero_positions;
    j["prefix"] = format_word(stream.prefix(std::min<std::size_t>(cfg.letters, 32)), f.domain());
    emit_json(out, j);
  } else {
    out << "first letters " << format_word(stream.prefix(std::min<std::size_t>(cfg.letters, 32)),
                                           f.domain())
        << "\nexponent of " << cfg.gen << " over " << cfg.letters << " prefixes: min " << scan.min
        << ", max " << scan.max << ", zero at " << scan.zero_positions.size() << " lengths\n";
  }
  return scan.zero_positions.empty() ? kPass : kFail;
}

int cmd_generic(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.seed) throw Error("generic refuses to run without --seed");
  const GenericityResult r = genericity_experiment(cfg.k, cfg.n, cfg.trials, *cfg.seed,
                                                   cfg.threads);
  if (cfg.format == Format::kCsv) {
    out << "trial,seed,max_piece_base,max_piece_torus,cprime16,cprime17\n";
    for (const auto& row : r.rows) {
      out << row.trial << "," << row.seed << "," << row.max_piece_base << ","
          << row.max_piece_torus << "," << row.cprime16 << "," << row.cprime17 << "\n";
    }
  } else if (cfg.format == Format::kJson) {
    Json j = envelope(cfg);
    j.erase("config");
    Json c = config_json(cfg);
    c.erase("threads");  // output must not depend on the thread count
    j["config"] = c;
    j["count_cprime16"] = r.count_cprime16;
    j["count_cprime17"] = r.count_cprime17;
    j["count_piece_within_two"] = r.count_piece_within_two;
    std::ostringstream f16, f17;
    f16 << std::fixed << std::setprecision(6) << r.fraction_cprime16;
    f17 << std::fixed << std::setprecision(6) << r.fraction_cprime17;
    j["fraction_cprime16"] = f16.str();
    j["fraction_cprime17"] = f17.str();
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      rows.push_back(Json{{"trial", row.trial},
                          {"seed", row.seed},
                          {"max_piece_base", row.max_piece_base},
                          {"max_piece_torus", row.max_piece_torus},
                          {"cprime16", row.cprime16},
                          {"cprime17", row.cprime17}});
    }
    j["trials"] = rows;
    emit_json(out, j);
  } else {
    out << "k = " << r.k << ", n = " << r.n << ", trials = " << r.trials << ", seed = " << r.seed
        << "\nC'(1/6) " << r.count_cprime16 << " (" << r.fraction_cprime16 << ")\nC'(1/7) "
        << r.count_cprime17 << " (" << r.fraction_cprime17 << ")\n"
        << "max piece within base + 2: " << r.count_piece_within_two << "\n";
  }
  return kPass;
}

}  // namespace sqhnn::cli
