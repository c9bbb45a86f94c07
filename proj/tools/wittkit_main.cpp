#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "wittkit/commands.hpp"

int main(int argc, char** argv) {
  using namespace wittkit;
  CLI::App app{"wittkit: exact elementary symplectic Witt group and unimodular row toolkit"};
  app.require_subcommand(1, 1);

  CommandOptions opt;
  std::string ring;
  std::string cert;
  std::string out;
  std::string format = "text";
  const std::map<std::string, std::string> help{
      {"ring-check", "validate a ring document and print its ideal basis"},
      {"gb", "Groebner basis of the ring ideal plus optional generators; normal forms"},
      {"row-certify", "Bezout witness for a row, or not-unimodular"},
      {"vaserstein", "Vaserstein matrix of a length-3 unimodular row"},
      {"pfaffian", "Pfaffian and determinant of an item"},
      {"eta", "eta of one invertible matrix, or the product certificate for two"},
      {"cert-verify", "check a certificate between two alternating items"},
      {"reduce", "symplectic reduction over a field, or a certificate between two items"},
      {"complete-square", "invertible completion with first row (a^2,b,c)"},
      {"relation-verify", "check a relation document and its certificate"},
  };
  for (const auto& name : subcommand_names()) {
    auto it = help.find(name);
    CLI::App* sub = app.add_subcommand(name, it == help.end() ? "" : it->second);
    sub->add_option("--ring", ring, "ring document");
    sub->add_option("--in", opt.inputs, "input document (repeatable)");
    sub->add_option("--cert", cert, "certificate document");
    sub->add_option("--out", out, "write the report here instead of stdout");
    sub->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--seed", opt.seed, "seed for randomized choices")->capture_default_str();
    sub->add_option("--max-degree", opt.budget.max_degree, "Groebner degree budget")->capture_default_str();
    sub->add_option("--gb-steps", opt.budget.max_steps, "Groebner S-pair budget")->capture_default_str();
    sub->add_option("--max-size", opt.max_size, "largest accepted matrix size")->capture_default_str();
    sub->add_flag("--timing", opt.timing, "include wall time in the report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  opt.subcommand = app.get_subcommands().front()->get_name();
  if (!ring.empty()) opt.ring = ring;
  if (!cert.empty()) opt.cert = cert;
  opt.format = format == "structured" ? Format::structured : Format::text;

  const Report report = run_command(opt);
  const std::string text = emit_report(report, opt.format);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    file << text;
  }
  if (report.status != Status::ok && !report.message.empty()) std::cerr << report.message << "\n";
  return exit_code(report.status);
}
