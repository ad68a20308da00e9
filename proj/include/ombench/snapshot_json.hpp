#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ombench/ontology.hpp"

namespace ombench {

/// Canonical JSON form: fixed top-level key order, classes sorted by IRI,
/// sorted label keys and parent lists. Two exports of equal snapshots are
/// byte-identical.
nlohmann::ordered_json snapshot_to_json(const OntologySnapshot& onto);

/// Canonical serialization (two-space indent, trailing newline).
std::string export_snapshot_json(const OntologySnapshot& onto);

/// Throws SchemaError naming the offending path on any structural violation.
OntologySnapshot snapshot_from_json(const nlohmann::json& doc);

/// Parses raw bytes; throws ParseError on malformed JSON, SchemaError on
/// structural violations.
OntologySnapshot import_snapshot_json(const std::string& bytes);

OntologySnapshot read_snapshot_json(const std::filesystem::path& path);
void write_snapshot_json(const OntologySnapshot& onto, const std::filesystem::path& path);

}  // namespace ombench
