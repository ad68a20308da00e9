#include "ombench/hub_table.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ombench/errors.hpp"

namespace ombench {

HubTable HubTable::from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw SchemaError("$", "expected an object of hub concepts");
    }
    HubTable table;
    for (const auto& [concept_id, per_onto] : doc.items()) {
        if (concept_id.empty()) {
            ++table.invalid_entries;
            continue;
        }
        if (!per_onto.is_object()) {
            throw SchemaError(concept_id, "expected an object of ontology ids");
        }
        auto& slot = table.entries[concept_id];
        for (const auto& [onto_id, iris] : per_onto.items()) {
            if (!iris.is_array()) {
                throw SchemaError(concept_id + "." + onto_id, "expected an array of IRIs");
            }
            std::vector<std::string> list;
            for (std::size_t i = 0; i < iris.size(); ++i) {
                if (!iris[i].is_string()) {
                    throw SchemaError(concept_id + "." + onto_id + "[" + std::to_string(i) + "]",
                                      "expected a string");
                }
                const std::string iri = iris[i].get<std::string>();
                if (iri.empty()) {
                    ++table.invalid_entries;
                    continue;
                }
                list.push_back(iri);
            }
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            slot[onto_id] = std::move(list);
        }
    }
    return table;
}

HubTable HubTable::read_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open hub table: " + path.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), 1, e.byte);
    }
    return from_json(doc);
}

}  // namespace ombench
