#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ombench/inverted_index.hpp"
#include "ombench/mapping.hpp"
#include "ombench/neg_sampling.hpp"
#include "ombench/ontology.hpp"

namespace ombench {

/// Edit distance over Unicode code points (UTF-8 input, lenient decoding).
std::size_t levenshtein(const std::string& a, const std::string& b);

/**
 * Max over all label pairs of 1 − levenshtein(a,b)/max(|a|,|b|), after
 * lowercase/whitespace normalization. A list that is empty (or becomes
 * empty) scores 0; *empty_labels is set when that happens.
 */
double edit_similarity(const std::vector<std::string>& labels_a,
                       const std::vector<std::string>& labels_b, bool* empty_labels = nullptr);

struct MatcherConfig {
    double threshold = 0.0;       // keep pairs scoring >= threshold; > 1 yields nothing
    std::size_t candidate_k = 200;
    std::vector<std::string> synonym_properties;  // empty = all properties
    bool all_above_threshold = false;             // default: one best target per source

    void validate() const;
};

struct EditSimMatchResult {
    MappingSet mappings;
    std::size_t skipped_no_labels = 0;  // source classes without usable labels
};

/**
 * EditSim matching: per source class, score the top candidate_k index
 * candidates by edit similarity and keep the best pair at or above the
 * threshold (ties break to the lexicographically smaller target IRI).
 * The index must be built over onto_tgt; its synonym-property and
 * tokenizer settings drive label selection on both sides. Deterministic
 * for any jobs value.
 */
EditSimMatchResult editsim_match(const OntologySnapshot& onto_src,
                                 const OntologySnapshot& onto_tgt, const InvertedIndex& index,
                                 const MatcherConfig& cfg, std::size_t jobs = 1);

struct EditSimScoreResult {
    std::vector<CandidateRecord> records;  // input order, minus dropped records
    std::size_t dropped_unknown = 0;       // records naming classes absent from a snapshot
};

/// Attaches edit-similarity scores to each record's positive and negatives.
EditSimScoreResult editsim_score_candidates(const std::vector<CandidateRecord>& records,
                                            const OntologySnapshot& onto_src,
                                            const OntologySnapshot& onto_tgt,
                                            const std::vector<std::string>& synonym_properties,
                                            std::size_t jobs = 1);

}  // namespace ombench
