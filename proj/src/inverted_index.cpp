#include "ombench/inverted_index.hpp"

#include <algorithm>
#include <cmath>

namespace ombench {

InvertedIndex InvertedIndex::build(const OntologySnapshot& onto,
                                   const std::vector<std::string>& synonym_properties,
                                   std::shared_ptr<const SubwordVocab> vocab) {
    InvertedIndex index;
    index.synonym_properties_ = synonym_properties;
    index.vocab_ = std::move(vocab);
    index.class_iris_ = onto.class_iris();
    for (const auto& iri : index.class_iris_) {
        const std::vector<std::string> labels = index.class_labels(onto, iri);
        if (labels.empty()) {
            continue;
        }
        for (const auto& token : tokenize(labels, index.vocab_.get())) {
            index.postings_[token].insert(iri);
        }
    }
    return index;
}

const std::set<std::string>* InvertedIndex::postings(const std::string& token) const {
    auto it = postings_.find(token);
    return it == postings_.end() ? nullptr : &it->second;
}

double InvertedIndex::token_idf(const std::string& token) const {
    auto it = postings_.find(token);
    if (it == postings_.end() || it->second.empty()) {
        return 0.0;
    }
    return std::log10(static_cast<double>(class_iris_.size()) /
                      static_cast<double>(it->second.size()));
}

double InvertedIndex::idf_score(const std::vector<std::string>& tokens_a,
                                const std::vector<std::string>& tokens_b) const {
    const std::set<std::string> set_a(tokens_a.begin(), tokens_a.end());
    const std::set<std::string> set_b(tokens_b.begin(), tokens_b.end());
    double score = 0.0;
    // Sorted iteration fixes the accumulation order, keeping sums bitwise
    // reproducible against exhaustive re-scoring.
    for (const auto& token : set_a) {
        if (set_b.count(token) > 0 && postings_.count(token) > 0) {
            score += token_idf(token);
        }
    }
    return score;
}

std::vector<std::string> InvertedIndex::idf_sample(const std::vector<std::string>& query_tokens,
                                                   std::size_t n) const {
    std::map<std::string, double> scores;
    const std::set<std::string> unique_tokens(query_tokens.begin(), query_tokens.end());
    for (const auto& token : unique_tokens) {
        auto it = postings_.find(token);
        if (it == postings_.end()) {
            continue;
        }
        const double idf = token_idf(token);
        for (const auto& iri : it->second) {
            scores[iri] += idf;
        }
    }
    std::vector<std::pair<double, std::string>> ranked;
    ranked.reserve(scores.size());
    for (const auto& [iri, score] : scores) {
        ranked.emplace_back(score, iri);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) {
            return a.first > b.first;
        }
        return a.second < b.second;
    });
    std::vector<std::string> result;
    result.reserve(std::min(n, class_iris_.size()));
    for (const auto& [score, iri] : ranked) {
        if (result.size() >= n) {
            return result;
        }
        result.push_back(iri);
    }
    // Fill with zero-score classes in lexicographic order if needed.
    for (const auto& iri : class_iris_) {
        if (result.size() >= n) {
            break;
        }
        if (scores.count(iri) == 0) {
            result.push_back(iri);
        }
    }
    return result;
}

std::vector<std::string> InvertedIndex::class_labels(const OntologySnapshot& onto,
                                                     const std::string& iri) const {
    const ClassRecord& rec = onto.record(iri);
    std::vector<std::string> labels;
    if (synonym_properties_.empty()) {
        for (const auto& [prop, values] : rec.labels) {
            labels.insert(labels.end(), values.begin(), values.end());
        }
    } else {
        for (const auto& prop : synonym_properties_) {
            auto it = rec.labels.find(prop);
            if (it != rec.labels.end()) {
                labels.insert(labels.end(), it->second.begin(), it->second.end());
            }
        }
    }
    return labels;
}

std::vector<std::string> InvertedIndex::class_tokens(const OntologySnapshot& onto,
                                                     const std::string& iri) const {
    return tokenize(class_labels(onto, iri), vocab_.get());
}

}  // namespace ombench
