#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ombench/mapping.hpp"
#include "ombench/neg_sampling.hpp"

namespace ombench {

enum class SplitScheme { unsupervised, semi_supervised };

std::string to_string(SplitScheme scheme);
SplitScheme scheme_from_string(const std::string& name);

/// Deterministic train/val/test partition of a reference set.
struct SplitBundle {
    MappingSet train;  // empty under the unsupervised scheme
    MappingSet val;
    MappingSet test;
    std::uint64_t seed = 42;
    SplitScheme scheme = SplitScheme::unsupervised;
};

/**
 * Shuffles the canonically sorted references with the given seed and cuts
 * them into ratio-sized slices: 10/90 val/test (unsupervised) or 20/10/70
 * train/val/test (semi-supervised). Slice sizes use round-half-up.
 */
SplitBundle split_references(const MappingSet& refs, SplitScheme scheme, std::uint64_t seed);

struct RankingReport {
    double mrr = 0.0;
    std::map<std::size_t, double> hits;  // K -> Hits@K
    std::size_t n = 0;                   // records evaluated
    std::size_t skipped = 0;             // records without a positive score
};

/**
 * MRR and Hits@K over scored candidate records. The positive's rank is
 * pessimistic under ties: 1 + #{negatives scoring higher} + #{negatives
 * scoring equal}. Records missing scores are excluded and counted.
 */
RankingReport local_ranking_metrics(const std::vector<CandidateRecord>& records,
                                    const std::vector<std::size_t>& ks);

struct MatchReport {
    double precision = 0.0;
    double recall = 0.0;
    double f_beta = 0.0;
    double beta = 1.0;
    std::size_t out_size = 0;
    std::size_t ref_size = 0;        // |m_eval| when an eval subset is given
    std::size_t intersection = 0;    // |m_out ∩ (m_eval or m_ref)|
    bool empty_output = false;       // P reported as 0 because m_out was empty
    bool recall_suppressed = false;  // subsumption reporting: R and F withheld
};

/// (1+β²)·P·R / (β²·P + R); 0 whenever P·R = 0.
double f_beta_score(double precision, double recall, double beta);

/**
 * Precision/recall/F-β of a system output against a reference set. When
 * m_eval (a subset of m_ref, e.g. the test split) is given, precision uses
 * the adjusted denominator |m_out \ (m_ref \ m_eval)| and recall is taken
 * against m_eval only. With suppress_recall, recall and F are computed but
 * flagged so reports can withhold them.
 */
MatchReport global_matching_metrics(const MappingSet& m_out, const MappingSet& m_ref,
                                    const MappingSet* m_eval = nullptr, double beta = 1.0,
                                    bool suppress_recall = false);

}  // namespace ombench
