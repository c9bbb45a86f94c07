#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wittkit/documents.hpp"

namespace wittkit {

enum class Status { ok, reject, not_unit, not_unimodular, budget_exceeded, parse_error };

std::string_view to_string(Status status);

/// 0 for ok, 1 for definite negatives, 2 for parse and budget errors.
int exit_code(Status status);

enum class Format { text, structured };

struct Report {
  std::string command;
  Status status = Status::ok;
  std::string message;
  Json payload = Json::object();
  std::optional<double> elapsed_ms;  // emitted only when set
};

/// Deterministic for a fixed report: structured output is canonical JSON.
std::string emit_report(const Report& report, Format format);

}  // namespace wittkit
