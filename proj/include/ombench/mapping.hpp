#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ombench {

enum class MappingRelation { equivalence, subsumption };

std::string to_string(MappingRelation relation);
MappingRelation relation_from_string(const std::string& name);

/// One cross-ontology class pair with an optional score in [0, 1].
struct Mapping {
    std::string src;
    std::string tgt;
    MappingRelation relation = MappingRelation::equivalence;
    std::optional<double> score;

    bool same_pair(const Mapping& other) const { return src == other.src && tgt == other.tgt; }
};

/**
 * A set of mappings over one relation type, kept sorted by (src, tgt) and
 * deduplicated. The first score seen for a pair wins.
 */
class MappingSet {
public:
    explicit MappingSet(MappingRelation relation = MappingRelation::equivalence)
        : relation_(relation) {}

    MappingRelation relation() const { return relation_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    /// Inserts keeping sorted order; duplicates of an existing pair are ignored.
    void add(Mapping m);
    void add(std::string src, std::string tgt, std::optional<double> score = std::nullopt);

    bool contains(const std::string& src, const std::string& tgt) const;
    const Mapping* find(const std::string& src, const std::string& tgt) const;

    /// All target IRIs paired with the given source.
    std::vector<std::string> targets_of(const std::string& src) const;

    const std::vector<Mapping>& items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    MappingSet intersect(const MappingSet& other) const;
    MappingSet subtract(const MappingSet& other) const;

    bool operator==(const MappingSet& other) const;

    /// TSV with header "SrcEntity\tTgtEntity\tScore"; one mapping per row.
    static MappingSet read_tsv(const std::filesystem::path& path,
                               MappingRelation relation = MappingRelation::equivalence);
    void write_tsv(const std::filesystem::path& path) const;
    std::string to_tsv() const;

private:
    MappingRelation relation_;
    std::vector<Mapping> items_;
};

/// Deterministic score rendering: at most six decimals, trailing zeros
/// trimmed but one decimal kept ("1.0", "0.5", "0.571429").
std::string format_score(double score);

}  // namespace ombench
