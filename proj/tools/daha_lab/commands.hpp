#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "daha_lab/io.hpp"

namespace dahalab::cli {

enum Exit : int { kPass = 0, kVerifyFailed = 1, kUsage = 2 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Flavor flavor = Flavor::GL;
  int N = 2;
  int k = 1;
  std::optional<std::vector<int>> lambda;
  std::optional<int> radius;
  io::Format output = io::Format::Pretty;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool sabotage = false;
  // command specific
  bool rect = false;
  bool orbit = false;
  bool all_records = false;
  std::string input;
};

/// The weight selected by --lambda. SL accepts N-1 or N entries and is
/// renormalized to a last entry of 0 (with a warning on err).
Weight resolve_lambda(const RunConfig& cfg, std::ostream& err);

int cmd_walks(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tableaux(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_periodic(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out, std::ostream& err);

}  // namespace dahalab::cli
