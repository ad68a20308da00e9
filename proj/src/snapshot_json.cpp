#include "ombench/snapshot_json.hpp"

#include <fstream>
#include <sstream>

#include "ombench/errors.hpp"

namespace ombench {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string class_path(std::size_t index, const char* field) {
    return "classes[" + std::to_string(index) + "]." + field;
}

const json& require_field(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw SchemaError(path, "missing required field");
    }
    return *it;
}

std::string require_string(const json& value, const std::string& path) {
    if (!value.is_string()) {
        throw SchemaError(path, "expected a string");
    }
    return value.get<std::string>();
}

}  // namespace

ordered_json snapshot_to_json(const OntologySnapshot& onto) {
    ordered_json doc;
    doc["ontology_iri"] = onto.ontology_iri();
    doc["root_iri"] = onto.root_iri();
    ordered_json classes = ordered_json::array();
    for (const auto& [iri, rec] : onto.classes()) {
        ordered_json entry;
        entry["iri"] = rec.iri;
        ordered_json labels = ordered_json::object();
        for (const auto& [prop, values] : rec.labels) {
            labels[prop] = values;
        }
        entry["labels"] = std::move(labels);
        entry["parents"] = std::vector<std::string>(rec.parents.begin(), rec.parents.end());
        entry["deprecated"] = rec.deprecated;
        classes.push_back(std::move(entry));
    }
    doc["classes"] = std::move(classes);
    return doc;
}

std::string export_snapshot_json(const OntologySnapshot& onto) {
    return snapshot_to_json(onto).dump(2) + "\n";
}

OntologySnapshot snapshot_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw SchemaError("$", "expected a JSON object");
    }
    const std::string ontology_iri =
        require_string(require_field(doc, "ontology_iri", "ontology_iri"), "ontology_iri");
    const std::string root_iri =
        require_string(require_field(doc, "root_iri", "root_iri"), "root_iri");
    if (root_iri.empty()) {
        throw SchemaError("root_iri", "must be nonempty");
    }
    const json& classes = require_field(doc, "classes", "classes");
    if (!classes.is_array()) {
        throw SchemaError("classes", "expected an array");
    }
    std::vector<ClassRecord> records;
    records.reserve(classes.size());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const json& entry = classes[i];
        if (!entry.is_object()) {
            throw SchemaError("classes[" + std::to_string(i) + "]", "expected an object");
        }
        ClassRecord rec;
        rec.iri = require_string(require_field(entry, "iri", class_path(i, "iri")),
                                 class_path(i, "iri"));
        if (rec.iri.empty()) {
            throw SchemaError(class_path(i, "iri"), "must be nonempty");
        }
        if (!seen.insert(rec.iri).second) {
            throw SchemaError(class_path(i, "iri"), "duplicate class IRI: " + rec.iri);
        }
        const json& labels = require_field(entry, "labels", class_path(i, "labels"));
        if (!labels.is_object()) {
            throw SchemaError(class_path(i, "labels"), "expected an object");
        }
        for (const auto& [prop, values] : labels.items()) {
            if (!values.is_array()) {
                throw SchemaError(class_path(i, "labels") + "." + prop, "expected an array");
            }
            std::vector<std::string> list;
            for (std::size_t k = 0; k < values.size(); ++k) {
                list.push_back(require_string(
                    values[k], class_path(i, "labels") + "." + prop + "[" + std::to_string(k) + "]"));
            }
            rec.labels[prop] = std::move(list);
        }
        const json& parents = require_field(entry, "parents", class_path(i, "parents"));
        if (!parents.is_array()) {
            throw SchemaError(class_path(i, "parents"), "expected an array");
        }
        for (std::size_t k = 0; k < parents.size(); ++k) {
            rec.parents.insert(require_string(
                parents[k], class_path(i, "parents") + "[" + std::to_string(k) + "]"));
        }
        const json& deprecated = require_field(entry, "deprecated", class_path(i, "deprecated"));
        if (!deprecated.is_boolean()) {
            throw SchemaError(class_path(i, "deprecated"), "expected a boolean");
        }
        rec.deprecated = deprecated.get<bool>();
        records.push_back(std::move(rec));
    }
    return OntologySnapshot::build(ontology_iri, std::move(records), root_iri);
}

OntologySnapshot import_snapshot_json(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), 1, e.byte);
    }
    return snapshot_from_json(doc);
}

OntologySnapshot read_snapshot_json(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open snapshot: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return import_snapshot_json(buf.str());
}

void write_snapshot_json(const OntologySnapshot& onto, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write snapshot: " + path.string());
    }
    out << export_snapshot_json(onto);
}

}  // namespace ombench
