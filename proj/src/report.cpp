#include "wittkit/report.hpp"

#include <cstdio>

namespace wittkit {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::ok: return "ok";
    case Status::reject: return "reject";
    case Status::not_unit: return "not-unit";
    case Status::not_unimodular: return "not-unimodular";
    case Status::budget_exceeded: return "budget-exceeded";
    case Status::parse_error: return "parse-error";
  }
  return "parse-error";
}

int exit_code(Status status) {
  switch (status) {
    case Status::ok: return 0;
    case Status::reject:
    case Status::not_unit:
    case Status::not_unimodular: return 1;
    case Status::budget_exceeded:
    case Status::parse_error: return 2;
  }
  return 2;
}

namespace {

bool is_matrix(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v) {
    if (!row.is_array()) return false;
    for (const auto& e : row) {
      if (!e.is_string()) return false;
    }
  }
  return true;
}

std::string inline_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(std::string& out, const std::string& key, const Json& v, const std::string& indent) {
  if (is_matrix(v)) {
    out += indent + key + ":\n";
    for (const auto& row : v) {
      out += indent + "  [";
      for (std::size_t j = 0; j < row.size(); ++j) out += (j ? ", " : "") + row[j].get<std::string>();
      out += "]\n";
    }
  } else if (v.is_object()) {
    out += indent + key + ":\n";
    for (const auto& [k, sub] : v.items()) render(out, k, sub, indent + "  ");
  } else {
    out += indent + key + ": " + inline_value(v) + "\n";
  }
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

std::string emit_report(const Report& report, Format format) {
  if (format == Format::structured) {
    Json doc{{"command", report.command}, {"status", std::string(to_string(report.status))}, {"payload", report.payload}};
    if (!report.message.empty()) doc["message"] = report.message;
    if (report.elapsed_ms) doc["timing_ms"] = format_ms(*report.elapsed_ms);
    return dump_canonical(doc);
  }
  std::string out = report.command + ": " + std::string(to_string(report.status)) + "\n";
  if (!report.message.empty()) out += "message: " + report.message + "\n";
  for (const auto& [k, v] : report.payload.items()) render(out, k, v, "");
  if (report.elapsed_ms) out += "time: " + format_ms(*report.elapsed_ms) + " ms\n";
  return out;
}

}  // namespace wittkit
