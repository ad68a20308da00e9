#include "ombench/ontology.hpp"

#include <algorithm>
#include <deque>

#include "ombench/fingerprint.hpp"

namespace ombench {

namespace {

const std::set<std::string> kEmptySet;

void index_children(const std::map<std::string, ClassRecord>& classes, const std::string& root,
                    std::map<std::string, std::set<std::string>>& children) {
    children.clear();
    for (const auto& [iri, rec] : classes) {
        for (const auto& parent : rec.parents) {
            if (parent != root) {
                children[parent].insert(iri);
            }
        }
    }
}

}  // namespace

void ClassRecord::normalize() {
    for (auto it = labels.begin(); it != labels.end();) {
        auto& values = it->second;
        values.erase(std::remove(values.begin(), values.end(), std::string()), values.end());
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        if (values.empty()) {
            it = labels.erase(it);
        } else {
            ++it;
        }
    }
    parents.erase(iri);
}

OntologySnapshot::OntologySnapshot() {
    auto data = std::make_shared<Data>();
    data->root_iri = std::string(kOwlThing);
    data_ = std::move(data);
}

OntologySnapshot OntologySnapshot::build(std::string ontology_iri,
                                         std::vector<ClassRecord> records, std::string root_iri,
                                         BuildStats* stats) {
    auto data = std::make_shared<Data>();
    data->ontology_iri = std::move(ontology_iri);
    data->root_iri = std::move(root_iri);
    BuildStats local;
    for (auto& rec : records) {
        rec.normalize();
        auto [it, inserted] = data->classes.try_emplace(rec.iri, std::move(rec));
        if (!inserted) {
            ++local.merged_duplicates;
            ClassRecord& dst = it->second;
            ClassRecord& src = rec;
            for (auto& [prop, values] : src.labels) {
                auto& merged = dst.labels[prop];
                merged.insert(merged.end(), values.begin(), values.end());
                std::sort(merged.begin(), merged.end());
                merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
            }
            dst.parents.insert(src.parents.begin(), src.parents.end());
            dst.deprecated = dst.deprecated || src.deprecated;
            dst.parents.erase(dst.iri);
        }
    }
    // Edges must point at known classes or the root; anything else is dropped.
    for (auto& [iri, rec] : data->classes) {
        for (auto it = rec.parents.begin(); it != rec.parents.end();) {
            if (*it != data->root_iri && data->classes.count(*it) == 0) {
                it = rec.parents.erase(it);
                ++local.dangling_parents_dropped;
            } else {
                ++it;
            }
        }
    }
    index_children(data->classes, data->root_iri, data->children);
    if (stats != nullptr) {
        *stats = local;
    }
    return OntologySnapshot(std::move(data));
}

const ClassRecord& OntologySnapshot::record(const std::string& iri) const {
    auto it = data_->classes.find(iri);
    if (it == data_->classes.end()) {
        throw UnknownClassError(iri);
    }
    return it->second;
}

std::vector<std::string> OntologySnapshot::class_iris() const {
    std::vector<std::string> iris;
    iris.reserve(data_->classes.size());
    for (const auto& [iri, rec] : data_->classes) {
        iris.push_back(iri);
    }
    return iris;
}

std::set<std::string> OntologySnapshot::asserted_parents(const std::string& iri) const {
    const ClassRecord& rec = record(iri);
    std::set<std::string> result = rec.parents;
    result.erase(data_->root_iri);
    return result;
}

const std::set<std::string>& OntologySnapshot::children(const std::string& iri) const {
    if (data_->classes.count(iri) == 0) {
        throw UnknownClassError(iri);
    }
    auto it = data_->children.find(iri);
    return it == data_->children.end() ? kEmptySet : it->second;
}

std::set<std::string> OntologySnapshot::transitive_subsumers(const std::string& iri) const {
    const ClassRecord& start = record(iri);
    std::set<std::string> result;
    std::deque<const ClassRecord*> frontier;
    frontier.push_back(&start);
    while (!frontier.empty()) {
        const ClassRecord* rec = frontier.front();
        frontier.pop_front();
        for (const auto& parent : rec->parents) {
            if (parent == data_->root_iri) {
                continue;
            }
            if (result.insert(parent).second) {
                auto it = data_->classes.find(parent);
                if (it != data_->classes.end()) {
                    frontier.push_back(&it->second);
                }
            }
        }
    }
    return result;
}

OntologySnapshot OntologySnapshot::delete_class_preserving_hierarchy(
    const std::string& iri) const {
    OntologyEditor editor(*this);
    editor.delete_class_preserving_hierarchy(iri);
    return editor.freeze();
}

std::uint64_t OntologySnapshot::fingerprint() const {
    Fnv1a64 h;
    h.update(data_->ontology_iri);
    h.update_byte(0);
    h.update(data_->root_iri);
    h.update_byte(0);
    for (const auto& [iri, rec] : data_->classes) {
        h.update(iri);
        h.update_byte(rec.deprecated ? 1 : 0);
        for (const auto& parent : rec.parents) {
            h.update(parent);
            h.update_byte(1);
        }
        for (const auto& [prop, values] : rec.labels) {
            h.update(prop);
            h.update_byte(2);
            for (const auto& value : values) {
                h.update(value);
                h.update_byte(3);
            }
        }
        h.update_byte(4);
    }
    return h.value();
}

bool OntologySnapshot::operator==(const OntologySnapshot& other) const {
    if (data_ == other.data_) {
        return true;
    }
    return data_->ontology_iri == other.data_->ontology_iri &&
           data_->root_iri == other.data_->root_iri && data_->classes == other.data_->classes;
}

OntologyEditor::OntologyEditor(const OntologySnapshot& snapshot)
    : ontology_iri_(snapshot.ontology_iri()),
      root_iri_(snapshot.root_iri()),
      classes_(snapshot.data_->classes),
      children_(snapshot.data_->children) {}

std::set<std::string> OntologyEditor::asserted_parents(const std::string& iri) const {
    auto it = classes_.find(iri);
    if (it == classes_.end()) {
        throw UnknownClassError(iri);
    }
    std::set<std::string> result = it->second.parents;
    result.erase(root_iri_);
    return result;
}

void OntologyEditor::delete_class_preserving_hierarchy(const std::string& iri) {
    auto it = classes_.find(iri);
    if (it == classes_.end()) {
        throw UnknownClassError(iri);
    }
    std::set<std::string> parents = it->second.parents;
    parents.erase(root_iri_);
    std::set<std::string> kids;
    if (auto cit = children_.find(iri); cit != children_.end()) {
        kids = std::move(cit->second);
        children_.erase(cit);
    }
    classes_.erase(it);
    for (const auto& child : kids) {
        auto& child_parents = classes_.at(child).parents;
        child_parents.erase(iri);
        for (const auto& parent : parents) {
            if (parent != child) {
                child_parents.insert(parent);
                children_[parent].insert(child);
            }
        }
    }
    for (const auto& parent : parents) {
        if (auto cit = children_.find(parent); cit != children_.end()) {
            cit->second.erase(iri);
            if (cit->second.empty()) {
                children_.erase(cit);
            }
        }
    }
    deleted_.insert(iri);
}

OntologySnapshot OntologyEditor::freeze() const {
    auto data = std::make_shared<OntologySnapshot::Data>();
    data->ontology_iri = ontology_iri_;
    data->root_iri = root_iri_;
    data->classes = classes_;
    data->children = children_;
    return OntologySnapshot(std::move(data));
}

}  // namespace ombench
