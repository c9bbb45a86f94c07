#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wittkit/unimodular.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

using Json = nlohmann::json;

/// Reads a whole file; ParseError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Parses JSON text, mapping syntax errors to ParseError tagged with `where`.
Json parse_json(const std::string& text, const std::string& where);

// Ring documents: {"field": {"kind": "rationals"} | {"kind": "prime-field", "p": 13},
//                  "vars": [...], "order": "grevlex" | "lex", "relations": [...]}
RingSpec ring_spec_from_json(const Json& doc, const std::string& where);
Json ring_spec_to_json(const RingSpec& spec);
/// Parses and validates; invalid rings (bad field, duplicate variables, the
/// zero ring) are reported as ParseError.
RingPtr load_ring(const std::filesystem::path& path, const Budget& budget = {});

// Matrices: nested lists of polynomial strings.
Mat matrix_from_json(const RingPtr& ring, const Json& rows, const std::string& where);
Json matrix_to_json(const Mat& m);
std::vector<RingElement> elements_from_json(const RingPtr& ring, const Json& list, const std::string& where);
Json elements_to_json(const std::vector<RingElement>& v);

/// A matrix-valued document or relation item, one of
///   {"matrix": [[...]]}, {"eta": [[...]]}, {"psi": r},
///   {"vaserstein": {"row": [...], "witness": [...]}}  (witness optional).
Mat item_from_json(const RingPtr& ring, const Json& item, const std::string& where);

// Row documents: {"ring": "path" (optional), "row": [...], "witness": [...] (optional)}
struct RowDocument {
  std::optional<std::string> ring_ref;
  std::vector<RingElement> row;
  std::optional<std::vector<RingElement>> witness;
};
RowDocument row_from_json(const RingPtr& ring, const Json& doc, const std::string& where);
/// Ring reference of a row document, resolved against the document's directory.
std::optional<std::filesystem::path> row_ring_ref(const std::filesystem::path& row_path);

// Certificates: {"t": 0, "lhs_size": 4, "rhs_size": 4, "size": 8,
//                "word": [[i, j, "poly"], ...]} with 1-based indices.
EquivCert cert_from_json(const RingPtr& ring, const Json& doc, const std::string& where);
Json cert_to_json(const EquivCert& cert);

// Relations: {"lhs": [items], "rhs": [items], "cert": "relative/path.json"}
Relation load_relation(const RingPtr& ring, const std::filesystem::path& path);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& doc);

}  // namespace wittkit
