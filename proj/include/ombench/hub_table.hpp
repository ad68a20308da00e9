#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace ombench {

/**
 * Integrated cross-reference table: hub concept id -> ontology id -> class
 * IRIs. Pairs of classes linked to the same hub concept yield equivalence
 * mappings. Entries with empty class ids are flagged invalid and excluded.
 */
struct HubTable {
    std::map<std::string, std::map<std::string, std::vector<std::string>>> entries;
    std::size_t invalid_entries = 0;

    /// Expects {concept_id: {ontology_id: [iris]}}. Throws SchemaError on
    /// structural violations; empty ids are counted, not fatal.
    static HubTable from_json(const nlohmann::json& doc);
    static HubTable read_json(const std::filesystem::path& path);
};

}  // namespace ombench
