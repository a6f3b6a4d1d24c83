#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace infinigb::cli {

enum class Format { Json, Tsv };

struct RunConfig {
  std::string command;
  std::string order = "harevlex";
  std::string weights = "std";
  std::string field = "QQ";
  std::string w_rule = "all";
  std::uint32_t p = 2;
  std::string family;
  std::vector<std::string> gens;
  std::string gens_file;
  std::vector<std::string> divisors;
  std::string divisors_file;
  std::string input;
  std::string preset;
  std::string route = "both";
  std::string execution = "parallel";
  std::uint32_t n = 12;
  std::uint64_t deg = 24;
  std::uint32_t big_n = 40;
  std::uint32_t window_len = 3;
  std::uint32_t count = 50;
  bool reduced = false;
  bool schur = false;
  bool rr = false;
  std::optional<Format> format;  // per-command default when unset
  std::uint64_t seed = 1;
};

/// Exit status: 0 success, 1 verification failure, 2 usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (flags, then an optional --config TOML file, then defaults) and runs.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace infinigb::cli
