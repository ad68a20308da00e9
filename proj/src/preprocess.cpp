#include "ombench/preprocess.hpp"

#include <algorithm>
#include <set>

#include "ombench/errors.hpp"

namespace ombench {

namespace {

void check_unique(const std::vector<std::string>& list, const char* name) {
    std::set<std::string> seen;
    for (const auto& iri : list) {
        if (!seen.insert(iri).second) {
            throw SchemaError(name, "duplicate property IRI: " + iri);
        }
    }
}

}  // namespace

void ImportConfig::validate() const {
    check_unique(xref_properties, "xref_properties");
    check_unique(synonym_properties, "synonym_properties");
    for (const auto& iri : xref_properties) {
        if (std::find(synonym_properties.begin(), synonym_properties.end(), iri) !=
            synonym_properties.end()) {
            throw SchemaError("xref_properties", "property listed as both xref and synonym: " + iri);
        }
    }
}

OntologySnapshot preprocess(const OntologySnapshot& onto, const ImportConfig& cfg,
                            PreprocessReport* report) {
    cfg.validate();
    PreprocessReport local;

    OntologyEditor editor(onto);
    if (cfg.drop_deprecated) {
        for (const auto& iri : onto.class_iris()) {
            if (onto.record(iri).deprecated) {
                editor.delete_class_preserving_hierarchy(iri);
                ++local.deprecated_removed;
            }
        }
    }
    OntologySnapshot pruned = editor.freeze();

    if (!cfg.xref_properties.empty()) {
        std::vector<ClassRecord> records;
        records.reserve(pruned.size());
        for (const auto& [iri, rec] : pruned.classes()) {
            ClassRecord copy = rec;
            for (const auto& prop : cfg.xref_properties) {
                local.xref_lists_stripped += copy.labels.erase(prop);
            }
            records.push_back(std::move(copy));
        }
        pruned = OntologySnapshot::build(pruned.ontology_iri(), std::move(records),
                                         pruned.root_iri());
    }

    if (report != nullptr) {
        *report = local;
    }
    return pruned;
}

}  // namespace ombench
