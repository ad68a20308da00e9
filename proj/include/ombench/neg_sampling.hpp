#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ombench/inverted_index.hpp"
#include "ombench/mapping.hpp"
#include "ombench/ontology.hpp"
#include "ombench/rng.hpp"

namespace ombench {

enum class TaskType { equivalence, subsumption };

enum class StrategyKind { idf, neighbour, random };

std::string to_string(StrategyKind kind);
StrategyKind strategy_from_string(const std::string& name);

struct StrategyStep {
    StrategyKind kind = StrategyKind::random;
    std::size_t count = 0;
};

/// Ordered strategy sequence with per-strategy candidate counts. The same
/// strategy may appear more than once.
struct SamplingPlan {
    std::vector<StrategyStep> strategies;
    std::size_t max_hops = 6;
    std::uint64_t seed = 42;

    std::size_t total() const;
};

/// One reference mapping with its sampled negative candidates; scores are
/// attached later by a matcher.
struct CandidateRecord {
    Mapping mapping;
    std::vector<std::string> candidates;
    std::vector<double> scores;            // parallel to candidates when scored
    std::optional<double> tgt_score;       // score of the positive class

    bool scored() const { return tgt_score.has_value() && scores.size() == candidates.size(); }
};

/**
 * Breadth-first search over the undirected subclass graph from the anchor,
 * root excluded. Complete hop rings are accumulated until at least n
 * candidates are collected or max_hops is exceeded; if the final ring
 * overflows n, a seeded uniform sample of that ring tops the result up to
 * exactly n. Rings are emitted nearest-first, sorted within a ring.
 */
std::vector<std::string> neighbour_sample(const OntologySnapshot& onto, const std::string& anchor,
                                          std::size_t n, std::size_t max_hops, DetRng& rng);

/// Inputs shared by every mapping of one sampling run.
struct SamplingContext {
    const OntologySnapshot* target = nullptr;       // candidate universe
    const InvertedIndex* index = nullptr;           // built over *target
    const MappingSet* refs = nullptr;               // reference mappings of the task
    TaskType task = TaskType::equivalence;
    // Subsumption only: equivalence partners of each source class, and the
    // snapshot in which those partners (and their subsumers) exist.
    const MappingSet* equiv_refs = nullptr;
    const OntologySnapshot* closure_target = nullptr;
};

/**
 * Classes that must never be sampled as negatives for m: every reference
 * partner of m.src, and for subsumption tasks also each equivalence partner
 * of m.src together with its transitive subsumers.
 */
std::set<std::string> compute_invalid_set(const Mapping& m, const SamplingContext& ctx);

/**
 * Draws the plan's negatives for one mapping. Per strategy, |G|+|T|+N raw
 * samples are generated, invalid and already-collected classes are removed,
 * the ranked remainder is truncated to N, and seeded random draws over the
 * remaining valid universe top the batch up to exactly N. The result has
 * exactly plan.total() unique candidates, none invalid.
 *
 * Randomness is seeded from (plan.seed, m.src, m.tgt), so records are
 * reproducible independently of processing order.
 */
CandidateRecord generate_negative_candidates(const Mapping& m, const SamplingPlan& plan,
                                             const SamplingContext& ctx);

/// JSON Lines candidate files: {"src","tgt","candidates"[, "scores","tgt_score"]}.
std::string candidate_record_to_jsonl(const CandidateRecord& record);
std::vector<CandidateRecord> read_candidates_jsonl(const std::filesystem::path& path,
                                                   MappingRelation relation);
void write_candidates_jsonl(const std::vector<CandidateRecord>& records,
                            const std::filesystem::path& path);

}  // namespace ombench
