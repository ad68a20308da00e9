#include "ombench/mapping.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ombench/errors.hpp"

namespace ombench {

namespace {

constexpr const char* kTsvHeader = "SrcEntity\tTgtEntity\tScore";

bool pair_less(const Mapping& a, const Mapping& b) {
    if (a.src != b.src) {
        return a.src < b.src;
    }
    return a.tgt < b.tgt;
}

}  // namespace

std::string to_string(MappingRelation relation) {
    return relation == MappingRelation::equivalence ? "equivalence" : "subsumption";
}

MappingRelation relation_from_string(const std::string& name) {
    if (name == "equivalence" || name == "equiv") {
        return MappingRelation::equivalence;
    }
    if (name == "subsumption" || name == "subs") {
        return MappingRelation::subsumption;
    }
    throw OmError("unknown mapping relation: " + name);
}

void MappingSet::add(Mapping m) {
    m.relation = relation_;
    auto it = std::lower_bound(items_.begin(), items_.end(), m, pair_less);
    if (it != items_.end() && it->same_pair(m)) {
        return;
    }
    items_.insert(it, std::move(m));
}

void MappingSet::add(std::string src, std::string tgt, std::optional<double> score) {
    add(Mapping{std::move(src), std::move(tgt), relation_, score});
}

bool MappingSet::contains(const std::string& src, const std::string& tgt) const {
    return find(src, tgt) != nullptr;
}

const Mapping* MappingSet::find(const std::string& src, const std::string& tgt) const {
    Mapping probe{src, tgt, relation_, std::nullopt};
    auto it = std::lower_bound(items_.begin(), items_.end(), probe, pair_less);
    if (it != items_.end() && it->same_pair(probe)) {
        return &*it;
    }
    return nullptr;
}

std::vector<std::string> MappingSet::targets_of(const std::string& src) const {
    Mapping probe{src, std::string(), relation_, std::nullopt};
    auto it = std::lower_bound(items_.begin(), items_.end(), probe, pair_less);
    std::vector<std::string> targets;
    for (; it != items_.end() && it->src == src; ++it) {
        targets.push_back(it->tgt);
    }
    return targets;
}

MappingSet MappingSet::intersect(const MappingSet& other) const {
    MappingSet result(relation_);
    for (const auto& m : items_) {
        if (other.contains(m.src, m.tgt)) {
            result.add(m);
        }
    }
    return result;
}

MappingSet MappingSet::subtract(const MappingSet& other) const {
    MappingSet result(relation_);
    for (const auto& m : items_) {
        if (!other.contains(m.src, m.tgt)) {
            result.add(m);
        }
    }
    return result;
}

bool MappingSet::operator==(const MappingSet& other) const {
    if (relation_ != other.relation_ || items_.size() != other.items_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (!items_[i].same_pair(other.items_[i])) {
            return false;
        }
    }
    return true;
}

MappingSet MappingSet::read_tsv(const std::filesystem::path& path, MappingRelation relation) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open mapping file: " + path.string());
    }
    MappingSet result(relation);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (lineno == 1) {
            if (line != kTsvHeader) {
                throw ParseError("mapping file missing header '" + std::string(kTsvHeader) + "'",
                                 1, 1);
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos) {
            throw ParseError("expected three tab-separated fields", lineno, 1);
        }
        Mapping m;
        m.src = line.substr(0, tab1);
        m.tgt = line.substr(tab1 + 1, tab2 - tab1 - 1);
        const std::string score_text = line.substr(tab2 + 1);
        if (m.src.empty() || m.tgt.empty()) {
            throw ParseError("empty entity IRI", lineno, 1);
        }
        if (!score_text.empty()) {
            try {
                std::size_t consumed = 0;
                m.score = std::stod(score_text, &consumed);
                if (consumed != score_text.size()) {
                    throw std::invalid_argument(score_text);
                }
            } catch (const std::exception&) {
                throw ParseError("invalid score '" + score_text + "'", lineno, 1);
            }
        }
        result.add(std::move(m));
    }
    return result;
}

std::string MappingSet::to_tsv() const {
    std::ostringstream out;
    out << kTsvHeader << "\n";
    for (const auto& m : items_) {
        out << m.src << "\t" << m.tgt << "\t" << format_score(m.score.value_or(1.0)) << "\n";
    }
    return out.str();
}

void MappingSet::write_tsv(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write mapping file: " + path.string());
    }
    out << to_tsv();
}

std::string format_score(double score) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", score);
    std::string text(buf);
    while (text.size() > 1 && text.back() == '0' && text[text.size() - 2] != '.') {
        text.pop_back();
    }
    return text;
}

}  // namespace ombench
