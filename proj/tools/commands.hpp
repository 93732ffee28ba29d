#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

namespace sqhnn::cli {

using Json = nlohmann::ordered_json;

enum class Format { kText, kJson, kCsv };

// Exit codes: verdict pass, verdict fail, malformed input or usage.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

struct RunConfig {
  std::string subcommand;
  std::string inline_input;  // presentation, word or endomorphism text
  std::string input_path;
  Format format = Format::kText;
  std::optional<std::uint64_t> seed;

  std::string gens;              // reduce
  std::string stable;            // rewrite, squarify --template
  bool use_template = false;           // squarify
  std::size_t leaf_bound = 1'000'000;
  std::string schedule_path;     // squarify --replay
  std::string dot_path;          // npc-check
  std::string ratio = "1/6";     // pieces
  std::string chi;               // bns
  long long sweep = 0;           // bns
  std::size_t max_len = 6;       // periodic-search
  unsigned max_iter = 2;
  std::size_t letters = 15625;   // prefix-scan
  std::string gen = "a";
  std::size_t k = 2;             // generic
  std::size_t n = 100;
  std::size_t trials = 200;
  unsigned threads = 1;
  std::size_t l = 8;
  std::string relator_path;
};

Json config_json(const RunConfig& cfg);

// Each command writes its report to `out` and returns an exit code.
// Malformed input surfaces as sqhnn::Error and is mapped by the caller.
int cmd_reduce(const RunConfig& cfg, std::ostream& out);
int cmd_betti(const RunConfig& cfg, std::ostream& out);
int cmd_rewrite(const RunConfig& cfg, std::ostream& out);
int cmd_squarify(const RunConfig& cfg, std::ostream& out);
int cmd_npc_check(const RunConfig& cfg, std::ostream& out);
int cmd_pieces(const RunConfig& cfg, std::ostream& out);
int cmd_bns(const RunConfig& cfg, std::ostream& out);
int cmd_immersion(const RunConfig& cfg, std::ostream& out);
int cmd_periodic_search(const RunConfig& cfg, std::ostream& out);
int cmd_prefix_scan(const RunConfig& cfg, std::ostream& out);
int cmd_generic(const RunConfig& cfg, std::ostream& out);
int cmd_paper(const RunConfig& cfg, std::ostream& out);

}  // namespace sqhnn::cli
