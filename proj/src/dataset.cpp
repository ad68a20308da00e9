#include "ombench/dataset.hpp"

#include <algorithm>

#include "ombench/rng.hpp"

namespace ombench {

OntologySnapshot prune(const OntologySnapshot& onto, const std::set<std::string>& preserve,
                       PruneReport* report) {
    PruneReport local;
    for (const auto& iri : preserve) {
        if (!onto.contains(iri)) {
            ++local.unknown_preserve_iris;
        }
    }
    OntologyEditor editor(onto);
    for (const auto& iri : onto.class_iris()) {
        if (preserve.count(iri) == 0) {
            editor.delete_class_preserving_hierarchy(iri);
            ++local.removed_classes;
        }
    }
    if (report != nullptr) {
        *report = local;
    }
    return editor.freeze();
}

MappingSet extract_equivalence(const HubTable& hub, const std::string& src_id,
                               const OntologySnapshot& onto_src, const std::string& tgt_id,
                               const OntologySnapshot& onto_tgt, EquivExtractReport* report) {
    EquivExtractReport local;
    local.invalid_entries = hub.invalid_entries;
    MappingSet result(MappingRelation::equivalence);
    for (const auto& [concept_id, per_onto] : hub.entries) {
        const auto src_it = per_onto.find(src_id);
        const auto tgt_it = per_onto.find(tgt_id);
        if (src_it == per_onto.end() || tgt_it == per_onto.end() || src_it->second.empty() ||
            tgt_it->second.empty()) {
            ++local.hub_concepts_unmatched;
            continue;
        }
        bool emitted = false;
        for (const auto& src_iri : src_it->second) {
            for (const auto& tgt_iri : tgt_it->second) {
                if (!onto_src.contains(src_iri) || !onto_tgt.contains(tgt_iri)) {
                    ++local.pairs_dropped_missing_class;
                    continue;
                }
                result.add(src_iri, tgt_iri, 1.0);
                emitted = true;
            }
        }
        if (emitted) {
            ++local.hub_concepts_matched;
        } else {
            ++local.hub_concepts_unmatched;
        }
    }
    if (report != nullptr) {
        *report = local;
    }
    return result;
}

SubsumptionBuildResult build_subsumption_dataset(const OntologySnapshot& onto_src,
                                                 const OntologySnapshot& onto_tgt,
                                                 const MappingSet& equiv, std::uint64_t seed) {
    SubsumptionBuildResult result;
    OntologyEditor editor(onto_tgt);

    struct Emitted {
        std::string src;
        std::string tgt;
    };
    std::vector<Emitted> emitted;

    // MappingSet iteration is already sorted by (src, tgt), which fixes the
    // deletion order and therefore the skip/remove outcomes.
    for (const auto& m : equiv) {
        if (editor.deleted().count(m.tgt) > 0) {
            ++result.skipped_equivalences;
            continue;
        }
        if (!onto_src.contains(m.src) || !editor.contains(m.tgt)) {
            ++result.unknown_class_skips;
            continue;
        }
        const std::set<std::string> parent_set = editor.asserted_parents(m.tgt);
        if (parent_set.empty()) {
            ++result.no_parent_skips;
            continue;
        }
        const std::vector<std::string> parents(parent_set.begin(), parent_set.end());
        DetRng rng(derive_seed(seed, m.src, m.tgt));
        const std::string& chosen = parents[rng.below(parents.size())];
        emitted.push_back(Emitted{m.src, chosen});
        editor.delete_class_preserving_hierarchy(m.tgt);
    }

    for (const auto& e : emitted) {
        if (editor.deleted().count(e.tgt) > 0) {
            ++result.removed_subsumptions;
        } else if (result.subs_mappings.contains(e.src, e.tgt)) {
            ++result.duplicate_emissions;
        } else {
            result.subs_mappings.add(e.src, e.tgt, 1.0);
        }
    }
    result.deleted_classes = editor.deleted();
    result.modified_target = editor.freeze();
    return result;
}

nlohmann::ordered_json SubsumptionBuildResult::report_json() const {
    nlohmann::ordered_json doc;
    doc["subs_mappings"] = subs_mappings.size();
    doc["skipped_equivalences"] = skipped_equivalences;
    doc["no_parent_skips"] = no_parent_skips;
    doc["removed_subsumptions"] = removed_subsumptions;
    doc["unknown_class_skips"] = unknown_class_skips;
    doc["duplicate_emissions"] = duplicate_emissions;
    doc["deleted_classes"] = deleted_classes.size();
    return doc;
}

}  // namespace ombench
