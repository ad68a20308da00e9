#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ombench/ontology.hpp"
#include "ombench/tokenize.hpp"

namespace ombench {

/**
 * Sub-word token -> class IRI postings over one ontology's labels, with the
 * idf-weighted overlap scorer used for candidate selection. The index
 * remembers its tokenizer settings so queries are segmented consistently,
 * and keeps the full (sorted) class universe: classes without labels still
 * count toward the collection size and can be drawn as zero-score fills.
 */
class InvertedIndex {
public:
    /// synonym_properties selects which annotation properties contribute
    /// label text; an empty list means all of them.
    static InvertedIndex build(const OntologySnapshot& onto,
                               const std::vector<std::string>& synonym_properties,
                               std::shared_ptr<const SubwordVocab> vocab = nullptr);

    std::size_t class_count() const { return class_iris_.size(); }
    const std::vector<std::string>& class_iris() const { return class_iris_; }

    const std::set<std::string>* postings(const std::string& token) const;

    /// log10(class_count / posting size); 0 for tokens without postings.
    double token_idf(const std::string& token) const;

    /// Sum of token idf over the (deduplicated) shared tokens of the two
    /// lists. Tokens absent from the index contribute nothing.
    double idf_score(const std::vector<std::string>& tokens_a,
                     const std::vector<std::string>& tokens_b) const;

    /// Top-n classes by idf score against the query tokens, descending,
    /// ties broken by lexicographic IRI. Zero-score classes appear only to
    /// fill n when fewer classes share a token.
    std::vector<std::string> idf_sample(const std::vector<std::string>& query_tokens,
                                        std::size_t n) const;

    /// Labels of a class under this index's synonym-property selection.
    std::vector<std::string> class_labels(const OntologySnapshot& onto,
                                          const std::string& iri) const;

    /// Query tokens for a class, using this index's tokenizer settings.
    std::vector<std::string> class_tokens(const OntologySnapshot& onto,
                                          const std::string& iri) const;

    const std::vector<std::string>& synonym_properties() const { return synonym_properties_; }
    const SubwordVocab* vocab() const { return vocab_.get(); }

private:
    std::map<std::string, std::set<std::string>> postings_;
    std::vector<std::string> class_iris_;
    std::vector<std::string> synonym_properties_;
    std::shared_ptr<const SubwordVocab> vocab_;
};

}  // namespace ombench
