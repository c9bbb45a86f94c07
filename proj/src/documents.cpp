#include "wittkit/documents.hpp"

#include <fstream>
#include <sstream>

#include "wittkit/error.hpp"

namespace wittkit {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kMaxStabilization = 64;

std::string at(const std::string& where, const std::string& field) { return where + field; }

const Json& require(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) throw ParseError("expected an object", where);
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'", where);
  return *it;
}

std::size_t index_from_json(const Json& v, const std::string& where) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) throw ParseError("expected a positive integer", where);
  return static_cast<std::size_t>(v.get<std::uint64_t>());
}

std::size_t count_from_json(const Json& v, const std::string& where) {
  if (!v.is_number_unsigned()) throw ParseError("expected a non-negative integer", where);
  return static_cast<std::size_t>(v.get<std::uint64_t>());
}

RingElement element_from_json(const RingPtr& ring, const Json& v, const std::string& where) {
  if (v.is_string()) return ring->parse(v.get<std::string>(), where);
  if (v.is_number_integer()) return ring->parse(v.dump(), where);
  throw ParseError("expected a polynomial string", where);
}

}  // namespace

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), where);
  }
}

RingSpec ring_spec_from_json(const Json& doc, const std::string& where) {
  RingSpec spec;
  const Json& field = require(doc, "field", where);
  const Json& kind = require(field, "kind", at(where, "/field"));
  if (kind == "rationals") {
    spec.field = FieldSpec::rationals();
  } else if (kind == "prime-field") {
    const Json& p = require(field, "p", at(where, "/field"));
    if (!p.is_number_unsigned()) throw ParseError("expected a prime", at(where, "/field/p"));
    spec.field = FieldSpec::prime(p.get<std::uint64_t>());
  } else {
    throw ParseError("field kind must be 'rationals' or 'prime-field'", at(where, "/field/kind"));
  }
  const Json& vars = require(doc, "vars", where);
  if (!vars.is_array()) throw ParseError("expected a list of names", at(where, "/vars"));
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (!vars[k].is_string()) throw ParseError("expected a name", at(where, "/vars/" + std::to_string(k)));
    spec.vars.push_back(vars[k].get<std::string>());
  }
  if (auto it = doc.find("order"); it != doc.end()) {
    if (*it == "grevlex") {
      spec.order = MonomialOrder::grevlex;
    } else if (*it == "lex") {
      spec.order = MonomialOrder::lex;
    } else {
      throw ParseError("order must be 'grevlex' or 'lex'", at(where, "/order"));
    }
  }
  if (auto it = doc.find("relations"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("expected a list of polynomials", at(where, "/relations"));
    for (std::size_t k = 0; k < it->size(); ++k) {
      if (!(*it)[k].is_string()) throw ParseError("expected a polynomial string", at(where, "/relations/" + std::to_string(k)));
      spec.relations.push_back((*it)[k].get<std::string>());
    }
  }
  return spec;
}

Json ring_spec_to_json(const RingSpec& spec) {
  Json field = spec.field.kind == FieldKind::rationals ? Json{{"kind", "rationals"}}
                                                       : Json{{"kind", "prime-field"}, {"p", spec.field.p}};
  return Json{{"field", field},
              {"vars", spec.vars},
              {"order", std::string(to_string(spec.order))},
              {"relations", spec.relations}};
}

RingPtr load_ring(const fs::path& path, const Budget& budget) {
  const std::string where = path.string();
  RingSpec spec = ring_spec_from_json(parse_json(read_text_file(path), where), where);
  try {
    return Ring::create(std::move(spec), budget);
  } catch (const PreconditionViolation& e) {
    throw ParseError(e.what(), where);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), where);
  }
}

Mat matrix_from_json(const RingPtr& ring, const Json& rows, const std::string& where) {
  if (!rows.is_array() || rows.empty()) throw ParseError("expected a nonempty list of rows", where);
  std::vector<std::vector<RingElement>> entries;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string rw = at(where, "/" + std::to_string(i));
    if (!rows[i].is_array()) throw ParseError("expected a row", rw);
    if (rows[i].size() != rows[0].size()) throw ParseError("ragged matrix", rw);
    entries.push_back(elements_from_json(ring, rows[i], rw));
  }
  return Mat::from_rows(ring, entries);
}

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RingElement> elements_from_json(const RingPtr& ring, const Json& list, const std::string& where) {
  if (!list.is_array()) throw ParseError("expected a list of polynomials", where);
  std::vector<RingElement> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    out.push_back(element_from_json(ring, list[k], at(where, "/" + std::to_string(k))));
  }
  return out;
}

Json elements_to_json(const std::vector<RingElement>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

Mat item_from_json(const RingPtr& ring, const Json& item, const std::string& where) {
  if (!item.is_object() || item.size() != 1) throw ParseError("expected exactly one of matrix/eta/psi/vaserstein", where);
  const auto& [key, value] = *item.items().begin();
  const std::string w = at(where, "/" + key);
  try {
    if (key == "matrix") return matrix_from_json(ring, value, w);
    if (key == "eta") return eta(matrix_from_json(ring, value, w)).mat();
    if (key == "psi") {
      const std::size_t r = index_from_json(value, w);
      if (r > kMaxStabilization) throw ParseError("psi block count too large", w);
      return make_standard(ring, StandardKind::psi, r);
    }
    if (key == "vaserstein") {
      const RowDocument doc = row_from_json(ring, value, w);
      if (doc.row.size() != 3) throw ParseError("the Vaserstein matrix needs a row of length 3", w);
      if (doc.witness) return vaserstein(UmRow(doc.row, *doc.witness)).mat();
      auto row = certify_row(doc.row);
      if (!row) throw ParseError("row is not unimodular", w);
      return vaserstein(*row).mat();
    }
  } catch (const PreconditionViolation& e) {
    throw ParseError(e.what(), w);
  } catch (const NotInvertible& e) {
    throw ParseError(e.what(), w);
  }
  throw ParseError("unknown item kind '" + key + "'", where);
}

RowDocument row_from_json(const RingPtr& ring, const Json& doc, const std::string& where) {
  RowDocument out;
  if (auto it = doc.find("ring"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("expected a path", at(where, "/ring"));
    out.ring_ref = it->get<std::string>();
  }
  out.row = elements_from_json(ring, require(doc, "row", where), at(where, "/row"));
  if (out.row.empty()) throw ParseError("empty row", at(where, "/row"));
  if (auto it = doc.find("witness"); it != doc.end()) {
    out.witness = elements_from_json(ring, *it, at(where, "/witness"));
    if (out.witness->size() != out.row.size()) throw ParseError("witness length differs from the row", at(where, "/witness"));
  }
  return out;
}

std::optional<fs::path> row_ring_ref(const fs::path& row_path) {
  const Json doc = parse_json(read_text_file(row_path), row_path.string());
  auto it = doc.is_object() ? doc.find("ring") : doc.end();
  if (it == doc.end()) return std::nullopt;
  if (!it->is_string()) throw ParseError("expected a path", row_path.string() + "/ring");
  return row_path.parent_path() / it->get<std::string>();
}

EquivCert cert_from_json(const RingPtr& ring, const Json& doc, const std::string& where) {
  EquivCert cert{count_from_json(require(doc, "t", where), at(where, "/t")),
                 count_from_json(require(doc, "lhs_size", where), at(where, "/lhs_size")),
                 count_from_json(require(doc, "rhs_size", where), at(where, "/rhs_size")),
                 ElementaryWord(ring, 0)};
  if (cert.t > kMaxStabilization) throw ParseError("stabilization level too large", at(where, "/t"));
  const std::size_t size = count_from_json(require(doc, "size", where), at(where, "/size"));
  if (size != cert.ambient()) {
    throw ParseError("size must equal lhs_size + rhs_size + 2t = " + std::to_string(cert.ambient()), at(where, "/size"));
  }
  const Json& word = require(doc, "word", where);
  if (!word.is_array()) throw ParseError("expected a list of transvections", at(where, "/word"));
  cert.word = ElementaryWord(ring, size);
  for (std::size_t k = 0; k < word.size(); ++k) {
    const std::string w = at(where, "/word/" + std::to_string(k));
    const Json& letter = word[k];
    if (!letter.is_array() || letter.size() != 3) throw ParseError("expected [i, j, polynomial]", w);
    const std::size_t i = index_from_json(letter[0], w + "/0");
    const std::size_t j = index_from_json(letter[1], w + "/1");
    if (i > size || j > size) throw ParseError("index exceeds the ambient size", w);
    if (i == j) throw ParseError("transvection with i == j", w);
    cert.word.push(i - 1, j - 1, element_from_json(ring, letter[2], w + "/2"));
  }
  return cert;
}

Json cert_to_json(const EquivCert& cert) {
  Json word = Json::array();
  for (const auto& t : cert.word.letters()) word.push_back(Json::array({t.i + 1, t.j + 1, t.r.to_string()}));
  return Json{{"t", cert.t},
              {"lhs_size", cert.lhs_size},
              {"rhs_size", cert.rhs_size},
              {"size", cert.word.size()},
              {"word", std::move(word)}};
}

Relation load_relation(const RingPtr& ring, const fs::path& path) {
  const std::string where = path.string();
  const Json doc = parse_json(read_text_file(path), where);
  auto side = [&](const char* key) {
    const Json& items = require(doc, key, where);
    if (!items.is_array() || items.empty()) throw ParseError("expected a nonempty list of items", at(where, std::string("/") + key));
    std::vector<Mat> out;
    for (std::size_t k = 0; k < items.size(); ++k) {
      out.push_back(item_from_json(ring, items[k], at(where, std::string("/") + key + "/" + std::to_string(k))));
    }
    return out;
  };
  std::vector<Mat> lhs = side("lhs");
  std::vector<Mat> rhs = side("rhs");
  const Json& ref = require(doc, "cert", where);
  if (!ref.is_string()) throw ParseError("expected a relative path", at(where, "/cert"));
  const fs::path cert_path = path.parent_path() / ref.get<std::string>();
  const EquivCert cert = cert_from_json(ring, parse_json(read_text_file(cert_path), cert_path.string()), cert_path.string());
  return Relation{std::move(lhs), std::move(rhs), cert};
}

std::string dump_canonical(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace wittkit
