#include "ombench/editsim.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>

#include "ombench/errors.hpp"
#include "ombench/parallel.hpp"
#include "ombench/tokenize.hpp"

namespace ombench {

namespace {

/// Lenient UTF-8 decode: malformed bytes become single code points.
std::vector<std::uint32_t> to_codepoints(const std::string& s) {
    std::vector<std::uint32_t> cps;
    cps.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char lead = static_cast<unsigned char>(s[i]);
        std::size_t len = 1;
        std::uint32_t cp = lead;
        if (lead >= 0xF0) {
            len = 4;
            cp = lead & 0x07u;
        } else if (lead >= 0xE0) {
            len = 3;
            cp = lead & 0x0Fu;
        } else if (lead >= 0xC0) {
            len = 2;
            cp = lead & 0x1Fu;
        }
        if (len == 1 || i + len > s.size()) {
            cps.push_back(lead);
            ++i;
            continue;
        }
        bool ok = true;
        for (std::size_t j = 1; j < len; ++j) {
            const unsigned char cont = static_cast<unsigned char>(s[i + j]);
            if ((cont & 0xC0u) != 0x80u) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (cont & 0x3Fu);
        }
        if (!ok) {
            cps.push_back(lead);
            ++i;
        } else {
            cps.push_back(cp);
            i += len;
        }
    }
    return cps;
}

std::vector<std::string> normalized_labels(const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    out.reserve(labels.size());
    for (const auto& label : labels) {
        std::string norm = normalize_label(label);
        if (!norm.empty()) {
            out.push_back(std::move(norm));
        }
    }
    return out;
}

/// Label selection matching InvertedIndex::class_labels.
std::vector<std::string> select_labels(const OntologySnapshot& onto, const std::string& iri,
                                       const std::vector<std::string>& synonym_properties) {
    const ClassRecord& rec = onto.record(iri);
    std::vector<std::string> labels;
    if (synonym_properties.empty()) {
        for (const auto& [prop, values] : rec.labels) {
            labels.insert(labels.end(), values.begin(), values.end());
        }
    } else {
        for (const auto& prop : synonym_properties) {
            auto it = rec.labels.find(prop);
            if (it != rec.labels.end()) {
                labels.insert(labels.end(), it->second.begin(), it->second.end());
            }
        }
    }
    return labels;
}

double best_pair_similarity(const std::vector<std::string>& norm_a,
                            const std::vector<std::string>& norm_b) {
    double best = 0.0;
    for (const auto& a : norm_a) {
        for (const auto& b : norm_b) {
            const std::size_t la = to_codepoints(a).size();
            const std::size_t lb = to_codepoints(b).size();
            const std::size_t longest = std::max(la, lb);
            if (longest == 0) {
                continue;
            }
            const double sim =
                1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
            best = std::max(best, sim);
            if (best == 1.0) {
                return best;
            }
        }
    }
    return best;
}

}  // namespace

std::size_t levenshtein(const std::string& a, const std::string& b) {
    const std::vector<std::uint32_t> ca = to_codepoints(a);
    const std::vector<std::uint32_t> cb = to_codepoints(b);
    if (ca.empty()) {
        return cb.size();
    }
    if (cb.empty()) {
        return ca.size();
    }
    std::vector<std::size_t> prev(cb.size() + 1);
    std::vector<std::size_t> curr(cb.size() + 1);
    for (std::size_t j = 0; j <= cb.size(); ++j) {
        prev[j] = j;
    }
    for (std::size_t i = 1; i <= ca.size(); ++i) {
        curr[0] = i;
        for (std::size_t j = 1; j <= cb.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (ca[i - 1] == cb[j - 1] ? 0 : 1);
            curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, sub});
        }
        std::swap(prev, curr);
    }
    return prev[cb.size()];
}

double edit_similarity(const std::vector<std::string>& labels_a,
                       const std::vector<std::string>& labels_b, bool* empty_labels) {
    const std::vector<std::string> norm_a = normalized_labels(labels_a);
    const std::vector<std::string> norm_b = normalized_labels(labels_b);
    if (norm_a.empty() || norm_b.empty()) {
        if (empty_labels != nullptr) {
            *empty_labels = true;
        }
        return 0.0;
    }
    if (empty_labels != nullptr) {
        *empty_labels = false;
    }
    return best_pair_similarity(norm_a, norm_b);
}

void MatcherConfig::validate() const {
    if (threshold < 0.0) {
        throw OmError("matcher threshold must be non-negative");
    }
    if (candidate_k == 0) {
        throw OmError("matcher candidate_k must be at least 1");
    }
}

EditSimMatchResult editsim_match(const OntologySnapshot& onto_src,
                                 const OntologySnapshot& onto_tgt, const InvertedIndex& index,
                                 const MatcherConfig& cfg, std::size_t jobs) {
    cfg.validate();
    const std::vector<std::string>& sources = onto_src.class_iris();
    std::vector<std::vector<Mapping>> slots(sources.size());
    std::atomic<std::size_t> skipped{0};

    parallel_for(sources.size(), jobs, [&](std::size_t i) {
        const std::string& src = sources[i];
        const std::vector<std::string> src_labels =
            normalized_labels(index.class_labels(onto_src, src));
        if (src_labels.empty()) {
            skipped.fetch_add(1, std::memory_order_relaxed);
            return;
        }
        const std::vector<std::string> query = index.class_tokens(onto_src, src);
        std::optional<Mapping> best;
        for (const auto& tgt : index.idf_sample(query, cfg.candidate_k)) {
            const std::vector<std::string> tgt_labels =
                normalized_labels(index.class_labels(onto_tgt, tgt));
            if (tgt_labels.empty()) {
                continue;
            }
            const double sim = best_pair_similarity(src_labels, tgt_labels);
            if (sim < cfg.threshold) {
                continue;
            }
            if (cfg.all_above_threshold) {
                slots[i].push_back({src, tgt, MappingRelation::equivalence, sim});
                continue;
            }
            if (!best || sim > *best->score || (sim == *best->score && tgt < best->tgt)) {
                best = Mapping{src, tgt, MappingRelation::equivalence, sim};
            }
        }
        if (best) {
            slots[i].push_back(std::move(*best));
        }
    });

    EditSimMatchResult result;
    for (auto& slot : slots) {
        for (auto& m : slot) {
            result.mappings.add(std::move(m));
        }
    }
    result.skipped_no_labels = skipped.load();
    return result;
}

EditSimScoreResult editsim_score_candidates(const std::vector<CandidateRecord>& records,
                                            const OntologySnapshot& onto_src,
                                            const OntologySnapshot& onto_tgt,
                                            const std::vector<std::string>& synonym_properties,
                                            std::size_t jobs) {
    std::vector<std::optional<CandidateRecord>> slots(records.size());
    parallel_for(records.size(), jobs, [&](std::size_t i) {
        const CandidateRecord& record = records[i];
        if (!onto_src.contains(record.mapping.src) || !onto_tgt.contains(record.mapping.tgt)) {
            return;
        }
        for (const auto& cand : record.candidates) {
            if (!onto_tgt.contains(cand)) {
                return;
            }
        }
        const std::vector<std::string> src_labels =
            normalized_labels(select_labels(onto_src, record.mapping.src, synonym_properties));
        CandidateRecord scored = record;
        scored.scores.clear();
        scored.scores.reserve(record.candidates.size());
        for (const auto& cand : record.candidates) {
            scored.scores.push_back(best_pair_similarity(
                src_labels, normalized_labels(select_labels(onto_tgt, cand, synonym_properties))));
        }
        scored.tgt_score = best_pair_similarity(
            src_labels,
            normalized_labels(select_labels(onto_tgt, record.mapping.tgt, synonym_properties)));
        slots[i] = std::move(scored);
    });

    EditSimScoreResult result;
    result.records.reserve(records.size());
    for (auto& slot : slots) {
        if (slot) {
            result.records.push_back(std::move(*slot));
        } else {
            ++result.dropped_unknown;
        }
    }
    return result;
}

}  // namespace ombench
