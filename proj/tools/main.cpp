#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"
#include "sqhnn/errors.hpp"
#include "sqhnn/version.hpp"

using namespace sqhnn::cli;

namespace {

const std::map<std::string, Format> kFormats{
    {"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};

// Input source: inline text (positional) or --file, exactly one.
void add_input(CLI::App* sub, RunConfig& cfg, const std::string& what) {
  auto* inline_opt = sub->add_option("input", cfg.inline_input, what + " text");
  auto* file_opt = sub->add_option("-f,--file", cfg.input_path, what + " file")
                       ->check(CLI::ExistingFile);
  inline_opt->excludes(file_opt);
  sub->callback([inline_opt, file_opt, what] {
    if (inline_opt->count() + file_opt->count() != 1) {
      throw CLI::ValidationError("input", "give the " + what + " inline or with --file");
    }
  });
}

void add_format(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "text, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify strictly ascending HNN extensions of free groups"};
  app.set_version_flag("--version", sqhnn::kVersion);
  app.require_subcommand(1);
  RunConfig cfg;

  auto* reduce = app.add_subcommand("reduce", "Free and cyclic reduction of a word");
  add_input(reduce, cfg, "word");
  reduce->add_option("--gens", cfg.gens, "comma-separated generator names")->required();
  add_format(reduce, cfg);

  auto* betti = app.add_subcommand("betti", "Abelianization of a presentation");
  add_input(betti, cfg, "presentation");
  add_format(betti, cfg);

  auto* rewrite = app.add_subcommand("rewrite", "Rewrite over a_i = t^i a t^-i");
  add_input(rewrite, cfg, "presentation");
  rewrite->add_option("--stable", cfg.stable, "generator to eliminate");
  add_format(rewrite, cfg);

  auto* squarify = app.add_subcommand("squarify", "Cut relators down to length 4");
  add_input(squarify, cfg, "presentation");
  squarify->add_flag("--template", cfg.use_template, "rewrite then use the fixed template");
  squarify->add_option("--stable", cfg.stable, "generator to eliminate with --template");
  squarify->add_option("--bound", cfg.leaf_bound, "leaf budget of the search");
  squarify->add_option("--replay", cfg.schedule_path, "replay a schedule file")
      ->check(CLI::ExistingFile);
  add_format(squarify, cfg);

  auto* npc = app.add_subcommand("npc-check", "Link condition of a square presentation");
  add_input(npc, cfg, "presentation");
  npc->add_option("--dot", cfg.dot_path, "write the link graph in DOT");
  add_format(npc, cfg);

  auto* pieces = app.add_subcommand("pieces", "Longest piece and C'(p/q)");
  add_input(pieces, cfg, "presentation");
  pieces->add_option("--ratio", cfg.ratio, "small cancellation ratio p/q");
  add_format(pieces, cfg);

  auto* bns = app.add_subcommand("bns", "Brown classification of characters");
  add_input(bns, cfg, "presentation");
  bns->add_option("--chi", cfg.chi, "character values x,y on the two generators");
  bns->add_option("--sweep", cfg.sweep, "all primitive characters in [-N, N]^2")
      ->check(CLI::PositiveNumber);
  add_format(bns, cfg);

  auto* immersion = app.add_subcommand("immersion", "Immersion test of an endomorphism");
  add_input(immersion, cfg, "endomorphism");
  add_format(immersion, cfg);

  auto* periodic = app.add_subcommand("periodic-search", "Bounded periodic conjugacy search");
  add_input(periodic, cfg, "endomorphism");
  periodic->add_option("--max-len", cfg.max_len, "longest cyclic word");
  periodic->add_option("--max-iter", cfg.max_iter, "largest iterate");
  add_format(periodic, cfg);

  auto* scan = app.add_subcommand("prefix-scan", "Exponent sums along the fixed word");
  add_input(scan, cfg, "endomorphism");
  scan->add_option("--letters", cfg.letters, "prefix length");
  scan->add_option("--gen", cfg.gen, "generator whose exponent is tracked");
  add_format(scan, cfg);

  auto* generic = app.add_subcommand("generic", "Random endomorphism experiment");
  generic->add_option("--k", cfg.k, "rank")->check(CLI::PositiveNumber);
  generic->add_option("--n", cfg.n, "image length")->check(CLI::PositiveNumber);
  generic->add_option("--trials", cfg.trials, "number of trials")->check(CLI::PositiveNumber);
  generic->add_option("--seed", cfg.seed, "experiment seed")->required();
  generic->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  add_format(generic, cfg);

  auto* paper = app.add_subcommand("paper", "Replay the flagship computations");
  paper->add_option("--l", cfg.l, "even l >= 2");
  paper->add_option("--relator", cfg.relator_path, "relator file over a, t")
      ->check(CLI::ExistingFile);
  add_format(paper, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::map<CLI::App*, int (*)(const RunConfig&, std::ostream&)> dispatch{
      {reduce, cmd_reduce},       {betti, cmd_betti},
      {rewrite, cmd_rewrite},     {squarify, cmd_squarify},
      {npc, cmd_npc_check},       {pieces, cmd_pieces},
      {bns, cmd_bns},             {immersion, cmd_immersion},
      {periodic, cmd_periodic_search}, {scan, cmd_prefix_scan},
      {generic, cmd_generic},     {paper, cmd_paper}};

  CLI::App* chosen = app.get_subcommands().front();
  cfg.subcommand = chosen->get_name();
  try {
    return dispatch.at(chosen)(cfg, std::cout);
  } catch (const sqhnn::ParityError& e) {
    std::cerr << "parity error: " << e.what() << "\n";
  } catch (const sqhnn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
