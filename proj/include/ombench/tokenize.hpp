#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

namespace ombench {

/**
 * Sub-word vocabulary loaded from a plain-text file, one token per line.
 * Continuation tokens carry a "##" prefix. Entries are lowercased on load
 * to match the tokenizer's normalization.
 */
class SubwordVocab {
public:
    SubwordVocab() = default;
    explicit SubwordVocab(std::vector<std::string> tokens);

    static SubwordVocab load(const std::filesystem::path& path);

    bool contains(const std::string& token) const { return tokens_.count(token) > 0; }
    std::size_t size() const { return tokens_.size(); }
    std::size_t max_token_length() const { return max_len_; }

private:
    std::set<std::string> tokens_;
    std::size_t max_len_ = 0;
};

/**
 * Lowercases and splits labels into word tokens (runs of alphanumeric or
 * non-ASCII bytes). With a vocabulary, each word is further segmented by
 * greedy longest match: at non-initial positions a "##"-prefixed entry is
 * preferred over a plain entry of the same length, and a word that cannot
 * be segmented falls back to itself as a single token.
 */
std::vector<std::string> tokenize(const std::vector<std::string>& labels,
                                  const SubwordVocab* vocab = nullptr);

/// Lowercase + whitespace-collapse normalization shared by the tokenizer
/// and the edit-similarity scorer.
std::string normalize_label(const std::string& label);

}  // namespace ombench
