#include "ombench/tokenize.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "ombench/errors.hpp"

namespace ombench {

namespace {

bool is_word_byte(unsigned char c) {
    // Non-ASCII bytes count as word characters so multi-byte sequences stay
    // inside one token.
    return std::isalnum(c) != 0 || c >= 0x80;
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_words(const std::string& text) {
    std::vector<std::string> words;
    std::string current;
    for (unsigned char c : text) {
        if (is_word_byte(c)) {
            current.push_back(static_cast<char>(c));
        } else if (!current.empty()) {
            words.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) {
        words.push_back(std::move(current));
    }
    return words;
}

void segment_word(const std::string& word, const SubwordVocab& vocab,
                  std::vector<std::string>& out) {
    std::vector<std::string> pieces;
    std::size_t pos = 0;
    while (pos < word.size()) {
        const std::size_t remaining = word.size() - pos;
        std::size_t longest = std::min(remaining, std::max<std::size_t>(vocab.max_token_length(), 1));
        bool matched = false;
        for (std::size_t len = longest; len >= 1; --len) {
            const std::string piece = word.substr(pos, len);
            if (pos > 0 && vocab.contains("##" + piece)) {
                pieces.push_back("##" + piece);
                pos += len;
                matched = true;
                break;
            }
            if (vocab.contains(piece)) {
                pieces.push_back(piece);
                pos += len;
                matched = true;
                break;
            }
        }
        if (!matched) {
            // No segmentation at this position: the whole word stands.
            out.push_back(word);
            return;
        }
    }
    out.insert(out.end(), pieces.begin(), pieces.end());
}

}  // namespace

SubwordVocab::SubwordVocab(std::vector<std::string> tokens) {
    for (auto& token : tokens) {
        if (token.empty()) {
            continue;
        }
        token = to_lower(std::move(token));
        max_len_ = std::max(max_len_, token.size());
        tokens_.insert(std::move(token));
    }
}

SubwordVocab SubwordVocab::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open vocabulary file: " + path.string());
    }
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            tokens.push_back(line);
        }
    }
    return SubwordVocab(std::move(tokens));
}

std::string normalize_label(const std::string& label) {
    std::string out;
    out.reserve(label.size());
    bool pending_space = false;
    for (unsigned char c : label) {
        if (std::isspace(c)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) {
                out.push_back(' ');
                pending_space = false;
            }
            out.push_back(static_cast<char>(std::tolower(c)));
        }
    }
    return out;
}

std::vector<std::string> tokenize(const std::vector<std::string>& labels,
                                  const SubwordVocab* vocab) {
    std::vector<std::string> tokens;
    for (const auto& label : labels) {
        const std::vector<std::string> words = split_words(to_lower(label));
        for (const auto& word : words) {
            if (vocab != nullptr && vocab->size() > 0) {
                segment_word(word, *vocab, tokens);
            } else {
                tokens.push_back(word);
            }
        }
    }
    return tokens;
}

}  // namespace ombench
