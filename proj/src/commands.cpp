#include "wittkit/commands.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>

#include "wittkit/error.hpp"
#include "wittkit/poly_format.hpp"

namespace wittkit {

namespace fs = std::filesystem;

namespace {

struct Context {
  const CommandOptions& opt;
  Report& report;

  RingPtr ring() const {
    if (!opt.ring) throw ParseError("this command needs --ring");
    return load_ring(*opt.ring, opt.budget);
  }

  /// The row document's own ring reference wins only when --ring is absent.
  RingPtr ring_for_row(const fs::path& row_path) const {
    if (opt.ring) return load_ring(*opt.ring, opt.budget);
    if (auto ref = row_ring_ref(row_path)) return load_ring(*ref, opt.budget);
    throw ParseError("no ring: pass --ring or set \"ring\" in the row document", row_path.string());
  }

  const std::string& input(std::size_t k) const { return opt.inputs[k]; }

  void expect_inputs(std::size_t lo, std::size_t hi) const {
    if (opt.inputs.size() < lo || opt.inputs.size() > hi) {
      throw ParseError(lo == hi ? "expected " + std::to_string(lo) + " --in file(s)"
                                : "expected between " + std::to_string(lo) + " and " + std::to_string(hi) +
                                      " --in files");
    }
  }

  Json document(const std::string& path) const { return parse_json(read_text_file(path), path); }

  void check_size(const Mat& m, const std::string& where) const {
    if (m.rows() > opt.max_size || m.cols() > opt.max_size) {
      throw BudgetExceeded(where + ": matrix size " + std::to_string(m.rows()) + " exceeds the limit " +
                           std::to_string(opt.max_size));
    }
  }

  Mat matrix(const RingPtr& ring, const std::string& path) const {
    Mat m = item_from_json(ring, document(path), path);
    check_size(m, path);
    return m;
  }

  RowDocument row(const RingPtr& ring, const std::string& path) const { return row_from_json(ring, document(path), path); }

  /// The row with its supplied witness when valid, else a lifted one.
  std::optional<UmRow> witnessed(const RowDocument& doc) const {
    if (doc.witness) {
      try {
        return UmRow(doc.row, *doc.witness);
      } catch (const PreconditionViolation&) {
      }
    }
    return certify_row(doc.row);
  }
};

Json mismatch_json(const Verdict& v) {
  Json out{{"reason", v.reason}};
  if (v.mismatch) out["mismatch"] = Json::array({v.mismatch->first + 1, v.mismatch->second + 1});
  return out;
}

void set_verdict(Report& report, const Verdict& v) {
  if (v.accepted) {
    report.payload["verdict"] = "accept";
  } else {
    report.status = Status::reject;
    report.payload["verdict"] = "reject";
    report.payload.update(mismatch_json(v));
  }
}

void ring_check(Context& c) {
  c.expect_inputs(0, 0);
  const RingPtr ring = c.ring();
  Json basis = Json::array();
  for (const auto& g : ring->ideal_basis().generators) basis.push_back(format_polynomial(ring->poly(), g));
  c.report.payload = Json{{"ring", ring_spec_to_json(ring->spec())}, {"basis", basis}, {"description", ring->describe()}};
}

void gb(Context& c) {
  c.expect_inputs(0, 1);
  const RingPtr ring = c.ring();
  const PolyRing& poly = ring->poly();
  std::vector<Polynomial> gens = ring->ideal_basis().generators;
  std::vector<Polynomial> targets;
  if (!c.opt.inputs.empty()) {
    const std::string& path = c.input(0);
    const Json doc = c.document(path);
    if (!doc.is_object()) throw ParseError("expected an object", path);
    auto polys = [&](const char* key, std::vector<Polynomial>& into) {
      auto it = doc.find(key);
      if (it == doc.end()) return;
      if (!it->is_array()) throw ParseError("expected a list of polynomials", path + "/" + key);
      for (std::size_t k = 0; k < it->size(); ++k) {
        const std::string w = path + "/" + key + "/" + std::to_string(k);
        if (!(*it)[k].is_string()) throw ParseError("expected a polynomial string", w);
        into.push_back(parse_polynomial(poly, (*it)[k].get<std::string>(), w));
      }
    };
    polys("generators", gens);
    polys("normal_form", targets);
  }
  const GroebnerBasis basis = buchberger(poly, gens, c.opt.budget);
  Json out = Json::array();
  for (const auto& g : basis.generators) out.push_back(format_polynomial(poly, g));
  c.report.payload = Json{{"basis", out}, {"order", std::string(to_string(poly.order()))}};
  if (!targets.empty()) {
    Json nfs = Json::array();
    for (const auto& f : targets) {
      nfs.push_back(format_polynomial(poly, normal_form(poly, f, basis, ReductionStrategy::random_divisor, c.opt.seed)));
    }
    c.report.payload["normal_forms"] = nfs;
  }
}

void row_certify(Context& c) {
  c.expect_inputs(1, 1);
  const RingPtr ring = c.ring_for_row(c.input(0));
  const RowDocument doc = c.row(ring, c.input(0));
  c.report.payload["row"] = elements_to_json(doc.row);
  const auto row = c.witnessed(doc);
  if (!row) {
    c.report.status = Status::not_unimodular;
    return;
  }
  c.report.payload["witness"] = elements_to_json(row->witness());
}

void vaserstein_cmd(Context& c) {
  c.expect_inputs(1, 1);
  const RingPtr ring = c.ring_for_row(c.input(0));
  const RowDocument doc = c.row(ring, c.input(0));
  if (doc.row.size() != 3) throw ParseError("the Vaserstein matrix needs a row of length 3", c.input(0));
  c.report.payload["row"] = elements_to_json(doc.row);
  const auto row = c.witnessed(doc);
  if (!row) {
    c.report.status = Status::not_unimodular;
    return;
  }
  const WittRep v = vaserstein(*row);
  c.report.payload["witness"] = elements_to_json(row->witness());
  c.report.payload["matrix"] = matrix_to_json(v.mat());
  c.report.payload["pfaffian"] = v.pf().to_string();
}

void pfaffian_cmd(Context& c) {
  c.expect_inputs(1, 1);
  const RingPtr ring = c.ring();
  const Mat m = c.matrix(ring, c.input(0));
  c.report.payload = Json{{"pfaffian", pfaffian(m).to_string()}, {"determinant", det(m).to_string()}};
}

void eta_cmd(Context& c) {
  c.expect_inputs(1, 2);
  const RingPtr ring = c.ring();
  const Mat a = c.matrix(ring, c.input(0));
  if (c.opt.inputs.size() == 1) {
    if (!invert_unit(det(a))) {
      c.report.status = Status::not_unit;
      c.report.payload["determinant"] = det(a).to_string();
      return;
    }
    const WittRep e = eta(a);
    c.report.payload = Json{{"matrix", matrix_to_json(e.mat())}, {"pfaffian", e.pf().to_string()}};
    return;
  }
  const Mat b = c.matrix(ring, c.input(1));
  for (const Mat* m : {&a, &b}) {
    if (!invert_unit(det(*m))) {
      c.report.status = Status::not_unit;
      c.report.payload["determinant"] = det(*m).to_string();
      return;
    }
  }
  const std::size_t n = a.rows();
  const Mat lhs = eta(perp(a * b, Mat::identity(ring, n))).mat();
  const Mat rhs = eta(perp(a, b)).mat();
  const EquivCert cert = eta_product_cert(a, b);
  const Verdict v = verify_equiv(lhs, rhs, cert);
  c.report.payload = Json{{"lhs", matrix_to_json(lhs)}, {"rhs", matrix_to_json(rhs)}, {"certificate", cert_to_json(cert)}};
  set_verdict(c.report, v);
}

void cert_verify(Context& c) {
  c.expect_inputs(2, 2);
  if (!c.opt.cert) throw ParseError("cert-verify needs --cert");
  const RingPtr ring = c.ring();
  const Mat g = c.matrix(ring, c.input(0));
  const Mat g2 = c.matrix(ring, c.input(1));
  const EquivCert cert = cert_from_json(ring, c.document(*c.opt.cert), *c.opt.cert);
  for (const auto& [m, path] : {std::pair{&g, c.input(0)}, std::pair{&g2, c.input(1)}}) {
    if (!is_alternating(*m)) throw ParseError("not an alternating matrix", path);
  }
  set_verdict(c.report, verify_equiv(g, g2, cert));
}

void reduce_cmd(Context& c) {
  c.expect_inputs(1, 2);
  const RingPtr ring = c.ring();
  const Mat g = c.matrix(ring, c.input(0));
  if (c.opt.inputs.size() == 1) {
    const SymplecticReduction red = symplectic_reduce(g);
    const std::size_t n = g.rows();
    // the word as a certificate for canonical ~ G
    const EquivCert cert{0, n, n, red.word.embedded(0, 2 * n)};
    c.report.payload = Json{{"canonical", matrix_to_json(red.canonical)}, {"certificate", cert_to_json(cert)}};
    return;
  }
  const Mat g2 = c.matrix(ring, c.input(1));
  auto cert = field_equiv_cert(g, g2);
  if (!cert) {
    c.report.status = Status::reject;
    c.report.payload = Json{{"verdict", "reject"}, {"reason", "Pfaffians differ: " + pfaffian(g).to_string() + " vs " + pfaffian(g2).to_string()}};
    return;
  }
  c.report.payload = Json{{"certificate", cert_to_json(*cert)}};
  set_verdict(c.report, verify_equiv(g, g2, *cert));
}

void complete_square(Context& c) {
  c.expect_inputs(1, 1);
  const RingPtr ring = c.ring_for_row(c.input(0));
  const RowDocument doc = c.row(ring, c.input(0));
  if (doc.row.size() != 3) throw ParseError("completion needs a row of length 3", c.input(0));
  c.report.payload["row"] = elements_to_json(doc.row);
  const auto row = c.witnessed(doc);
  if (!row) {
    c.report.status = Status::not_unimodular;
    return;
  }
  const Mat m = swan_towber_complete(*row);
  c.report.payload["witness"] = elements_to_json(row->witness());
  c.report.payload["matrix"] = matrix_to_json(m);
  c.report.payload["determinant"] = det(m).to_string();
}

void relation_verify(Context& c) {
  c.expect_inputs(1, 1);
  const RingPtr ring = c.ring();
  const Relation rel = load_relation(ring, c.input(0));
  c.check_size(assemble(rel.lhs), c.input(0) + "/lhs");
  c.check_size(assemble(rel.rhs), c.input(0) + "/rhs");
  set_verdict(c.report, verify_relation(rel));
}

const std::map<std::string, std::function<void(Context&)>>& table() {
  static const std::map<std::string, std::function<void(Context&)>> t{
      {"ring-check", ring_check},   {"gb", gb},
      {"row-certify", row_certify}, {"vaserstein", vaserstein_cmd},
      {"pfaffian", pfaffian_cmd},   {"eta", eta_cmd},
      {"cert-verify", cert_verify}, {"reduce", reduce_cmd},
      {"complete-square", complete_square}, {"relation-verify", relation_verify},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_command(const CommandOptions& options) {
  Report report;
  report.command = options.subcommand;
  const auto start = std::chrono::steady_clock::now();
  auto fail = [&report](Status status, const std::string& message) {
    report.status = status;
    report.message = message;
    report.payload = Json::object();
  };
  try {
    auto it = table().find(options.subcommand);
    if (it == table().end()) throw ParseError("unknown subcommand '" + options.subcommand + "'");
    Context ctx{options, report};
    it->second(ctx);
  } catch (const BudgetExceeded& e) {
    fail(Status::budget_exceeded, e.what());
  } catch (const NotInvertible& e) {
    fail(Status::not_unit, e.what());
  } catch (const Error& e) {
    // parse errors, validation failures and incoherent certificates
    fail(Status::parse_error, e.what());
  }
  if (options.timing) {
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

}  // namespace wittkit
