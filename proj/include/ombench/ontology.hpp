#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ombench/errors.hpp"

namespace ombench {

inline constexpr std::string_view kOwlThing = "http://www.w3.org/2002/07/owl#Thing";

/// One named class: IRI, annotation labels keyed by property IRI, asserted
/// parent classes, and a deprecation flag. Label lists are kept sorted and
/// deduplicated; a class is never its own parent.
struct ClassRecord {
    std::string iri;
    std::map<std::string, std::vector<std::string>> labels;
    std::set<std::string> parents;
    bool deprecated = false;

    /// Drops empty label strings, sorts and dedupes label lists, removes
    /// self-parent entries and empty label properties.
    void normalize();

    bool operator==(const ClassRecord&) const = default;
};

struct BuildStats {
    std::size_t merged_duplicates = 0;
    std::size_t dangling_parents_dropped = 0;
};

/**
 * Immutable named-class ontology model.
 *
 * The root class is implicit: it is never stored in the class map, classes
 * with no asserted parents are treated as its direct children, and hierarchy
 * queries exclude it. Parent references to classes absent from the snapshot
 * are dropped at construction so every stored edge is resolvable.
 *
 * Snapshots share their payload, so copies are cheap and safe to hand to
 * concurrent readers. Mutating operations return new snapshots.
 */
class OntologySnapshot {
public:
    OntologySnapshot();

    /// Builds a snapshot from class records. Records with the same IRI are
    /// merged (label/parent union, deprecation OR). Cycles in the asserted
    /// hierarchy are permitted.
    static OntologySnapshot build(std::string ontology_iri, std::vector<ClassRecord> records,
                                  std::string root_iri = std::string(kOwlThing),
                                  BuildStats* stats = nullptr);

    const std::string& ontology_iri() const { return data_->ontology_iri; }
    const std::string& root_iri() const { return data_->root_iri; }
    std::size_t size() const { return data_->classes.size(); }
    bool contains(const std::string& iri) const { return data_->classes.count(iri) > 0; }

    /// Throws UnknownClassError if absent.
    const ClassRecord& record(const std::string& iri) const;

    const std::map<std::string, ClassRecord>& classes() const { return data_->classes; }

    /// All class IRIs in lexicographic order.
    std::vector<std::string> class_iris() const;

    /// Asserted subsumers of a class, root excluded.
    std::set<std::string> asserted_parents(const std::string& iri) const;

    /// Asserted subclasses of a class (derived index).
    const std::set<std::string>& children(const std::string& iri) const;

    /// Every class reachable via one or more parent edges, root excluded.
    /// Contains the query class itself only if the asserted graph has a
    /// cycle through it.
    std::set<std::string> transitive_subsumers(const std::string& iri) const;

    /// Removes a class while re-linking each former child to each former
    /// parent. Returns a new snapshot; this one is untouched.
    OntologySnapshot delete_class_preserving_hierarchy(const std::string& iri) const;

    /// Stable content hash over the full model, for manifests and
    /// immutability checks.
    std::uint64_t fingerprint() const;

    bool operator==(const OntologySnapshot& other) const;

private:
    friend class OntologyEditor;

    struct Data {
        std::string ontology_iri;
        std::string root_iri;
        std::map<std::string, ClassRecord> classes;
        std::map<std::string, std::set<std::string>> children;
    };

    explicit OntologySnapshot(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

/**
 * Mutable working copy of a snapshot for batch edits. Keeps the child index
 * consistent while classes are deleted one by one, so a long deletion
 * sequence costs far less than chaining immutable single deletions.
 */
class OntologyEditor {
public:
    explicit OntologyEditor(const OntologySnapshot& snapshot);

    bool contains(const std::string& iri) const { return classes_.count(iri) > 0; }
    std::size_t size() const { return classes_.size(); }

    /// Asserted subsumers, root excluded. Throws UnknownClassError.
    std::set<std::string> asserted_parents(const std::string& iri) const;

    /// Deletes one class, asserting each former child as a subclass of each
    /// former parent (self-edges skipped). Throws UnknownClassError.
    void delete_class_preserving_hierarchy(const std::string& iri);

    const std::set<std::string>& deleted() const { return deleted_; }

    OntologySnapshot freeze() const;

private:
    std::string ontology_iri_;
    std::string root_iri_;
    std::map<std::string, ClassRecord> classes_;
    std::map<std::string, std::set<std::string>> children_;
    std::set<std::string> deleted_;
};

}  // namespace ombench
