#pragma once

#include <cstdint>
#include <set>
#include <string>

#include <json.hpp>

#include "ombench/hub_table.hpp"
#include "ombench/mapping.hpp"
#include "ombench/ontology.hpp"

namespace ombench {

struct PruneReport {
    std::size_t removed_classes = 0;
    std::size_t unknown_preserve_iris = 0;
};

/// Keeps exactly the preserved classes, removing every other class through
/// hierarchy-preserving deletion so ancestry among survivors is unchanged.
/// Unknown preserve IRIs are reported and ignored; an empty preserve set
/// yields an empty ontology.
OntologySnapshot prune(const OntologySnapshot& onto, const std::set<std::string>& preserve,
                       PruneReport* report = nullptr);

struct EquivExtractReport {
    std::size_t hub_concepts_matched = 0;
    std::size_t hub_concepts_unmatched = 0;
    std::size_t pairs_dropped_missing_class = 0;
    std::size_t invalid_entries = 0;
};

/// For each hub concept, emits the Cartesian product of its source-ontology
/// and target-ontology classes that exist in the given snapshots, as
/// equivalence mappings with score 1.0.
MappingSet extract_equivalence(const HubTable& hub, const std::string& src_id,
                               const OntologySnapshot& onto_src, const std::string& tgt_id,
                               const OntologySnapshot& onto_tgt,
                               EquivExtractReport* report = nullptr);

struct SubsumptionBuildResult {
    OntologySnapshot modified_target;
    MappingSet subs_mappings{MappingRelation::subsumption};
    std::size_t skipped_equivalences = 0;   // target class already deleted
    std::size_t no_parent_skips = 0;        // target class has no non-root parent
    std::size_t removed_subsumptions = 0;   // emitted, then target deleted later
    std::size_t unknown_class_skips = 0;    // either class absent at input
    std::size_t duplicate_emissions = 0;    // same (src, parent) pair emitted twice
    std::set<std::string> deleted_classes;

    nlohmann::ordered_json report_json() const;
};

/**
 * Builds subsumption reference mappings from equivalence references.
 *
 * Equivalences are processed in sorted (src, tgt) order. For each (c, c'):
 * if c' was already deleted the mapping is skipped; otherwise one asserted
 * parent c'' of c' is chosen at random (seeded per mapping), (c, c'') is
 * emitted, and c' is deleted with hierarchy preservation. Afterwards every
 * emitted mapping whose target was itself deleted later is removed.
 */
SubsumptionBuildResult build_subsumption_dataset(const OntologySnapshot& onto_src,
                                                 const OntologySnapshot& onto_tgt,
                                                 const MappingSet& equiv, std::uint64_t seed);

}  // namespace ombench
