#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittkit/report.hpp"

namespace wittkit {

struct CommandOptions {
  std::string subcommand;
  std::optional<std::string> ring;
  std::vector<std::string> inputs;
  std::optional<std::string> cert;
  Format format = Format::text;
  std::uint64_t seed = 1;
  Budget budget;
  std::size_t max_size = 8;
  bool timing = false;
};

const std::vector<std::string>& subcommand_names();

/// Loads every referenced document, then dispatches. Never throws for bad
/// input: failures are encoded in the report status.
Report run_command(const CommandOptions& options);

}  // namespace wittkit
