#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ombench/ontology.hpp"

namespace ombench {

/// Configuration for import-time preprocessing: which annotation properties
/// are cross-references to strip, which are synonym sources to retain.
struct ImportConfig {
    std::vector<std::string> xref_properties;
    std::vector<std::string> synonym_properties;
    bool drop_deprecated = true;

    /// Throws SchemaError on duplicate entries or overlap between the
    /// xref and synonym lists.
    void validate() const;
};

struct PreprocessReport {
    std::size_t deprecated_removed = 0;
    std::size_t xref_lists_stripped = 0;
};

/// Removes deprecated classes via hierarchy-preserving deletion and strips
/// label lists under cross-reference properties. All other annotation
/// properties are retained verbatim.
OntologySnapshot preprocess(const OntologySnapshot& onto, const ImportConfig& cfg,
                            PreprocessReport* report = nullptr);

}  // namespace ombench
