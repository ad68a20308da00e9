#include "ombench/neg_sampling.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "ombench/errors.hpp"

namespace ombench {

namespace {

using nlohmann::ordered_json;

/// Raw candidate stream for one strategy, before invalid-filtering. The
/// random strategy draws without replacement over classes already known to
/// be valid (universe minus invalid and collected negatives).
std::vector<std::string> raw_samples(StrategyKind kind, std::size_t count, const Mapping& m,
                                     const SamplingPlan& plan, const SamplingContext& ctx,
                                     const std::set<std::string>& excluded, DetRng& rng) {
    switch (kind) {
        case StrategyKind::idf: {
            const std::vector<std::string> query = ctx.index->class_tokens(*ctx.target, m.tgt);
            return ctx.index->idf_sample(query, count);
        }
        case StrategyKind::neighbour:
            return neighbour_sample(*ctx.target, m.tgt, count, plan.max_hops, rng);
        case StrategyKind::random: {
            std::vector<std::string> pool;
            pool.reserve(ctx.index->class_count());
            for (const auto& iri : ctx.index->class_iris()) {
                if (excluded.count(iri) == 0) {
                    pool.push_back(iri);
                }
            }
            const std::size_t k = std::min(count, pool.size());
            std::vector<std::string> out;
            out.reserve(k);
            for (std::size_t idx : rng.pick_indices(pool.size(), k)) {
                out.push_back(pool[idx]);
            }
            return out;
        }
    }
    return {};
}

}  // namespace

std::string to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::idf:
            return "idf";
        case StrategyKind::neighbour:
            return "neighbour";
        case StrategyKind::random:
            return "random";
    }
    return "random";
}

StrategyKind strategy_from_string(const std::string& name) {
    if (name == "idf") {
        return StrategyKind::idf;
    }
    if (name == "neighbour" || name == "neighbor") {
        return StrategyKind::neighbour;
    }
    if (name == "random") {
        return StrategyKind::random;
    }
    throw OmError("unknown sampling strategy: " + name);
}

std::size_t SamplingPlan::total() const {
    std::size_t sum = 0;
    for (const auto& step : strategies) {
        sum += step.count;
    }
    return sum;
}

std::vector<std::string> neighbour_sample(const OntologySnapshot& onto, const std::string& anchor,
                                          std::size_t n, std::size_t max_hops, DetRng& rng) {
    if (!onto.contains(anchor)) {
        throw UnknownClassError(anchor);
    }
    std::vector<std::string> collected;
    std::set<std::string> visited{anchor};
    std::set<std::string> ring{anchor};
    for (std::size_t hop = 1; hop <= max_hops && collected.size() < n && !ring.empty(); ++hop) {
        std::set<std::string> next;
        for (const auto& iri : ring) {
            for (const auto& parent : onto.asserted_parents(iri)) {
                if (visited.insert(parent).second) {
                    next.insert(parent);
                }
            }
            for (const auto& child : onto.children(iri)) {
                if (visited.insert(child).second) {
                    next.insert(child);
                }
            }
        }
        if (collected.size() + next.size() > n) {
            // Final ring overflows: seeded uniform sample within the ring.
            const std::vector<std::string> pool(next.begin(), next.end());
            const std::size_t need = n - collected.size();
            std::vector<std::size_t> chosen = rng.pick_indices(pool.size(), need);
            std::sort(chosen.begin(), chosen.end());
            for (std::size_t idx : chosen) {
                collected.push_back(pool[idx]);
            }
            return collected;
        }
        collected.insert(collected.end(), next.begin(), next.end());
        ring = std::move(next);
    }
    return collected;
}

std::set<std::string> compute_invalid_set(const Mapping& m, const SamplingContext& ctx) {
    std::set<std::string> invalid;
    if (ctx.refs != nullptr) {
        for (const auto& tgt : ctx.refs->targets_of(m.src)) {
            invalid.insert(tgt);
        }
    }
    invalid.insert(m.tgt);
    if (ctx.task == TaskType::subsumption && ctx.equiv_refs != nullptr) {
        const OntologySnapshot* closure =
            ctx.closure_target != nullptr ? ctx.closure_target : ctx.target;
        for (const auto& partner : ctx.equiv_refs->targets_of(m.src)) {
            invalid.insert(partner);
            if (closure != nullptr && closure->contains(partner)) {
                const std::set<std::string> ancestors = closure->transitive_subsumers(partner);
                invalid.insert(ancestors.begin(), ancestors.end());
            }
        }
    }
    return invalid;
}

CandidateRecord generate_negative_candidates(const Mapping& m, const SamplingPlan& plan,
                                             const SamplingContext& ctx) {
    if (ctx.target == nullptr || ctx.index == nullptr) {
        throw OmError("sampling context requires a target ontology and index");
    }
    if (!ctx.target->contains(m.tgt)) {
        throw UnknownClassError(m.tgt);
    }
    const std::set<std::string> invalid = compute_invalid_set(m, ctx);
    const auto& universe = ctx.index->class_iris();
    std::size_t invalid_in_universe = 0;
    for (const auto& iri : invalid) {
        if (ctx.target->contains(iri)) {
            ++invalid_in_universe;
        }
    }
    if (plan.total() + invalid_in_universe >= universe.size()) {
        throw InfeasiblePlanError(
            "plan requests " + std::to_string(plan.total()) + " negatives but only " +
            std::to_string(universe.size() - invalid_in_universe) +
            " valid classes exist for mapping " + m.src + " -> " + m.tgt);
    }

    DetRng rng(derive_seed(plan.seed, m.src, m.tgt));
    std::vector<std::string> negatives;         // G(m), in collection order
    std::set<std::string> negative_set;
    for (const auto& step : plan.strategies) {
        const std::size_t raw_count = negatives.size() + invalid.size() + step.count;
        std::set<std::string> excluded = invalid;
        excluded.insert(negative_set.begin(), negative_set.end());
        std::vector<std::string> batch;          // G_i(m), ranked order
        std::set<std::string> batch_set;
        for (const auto& iri : raw_samples(step.kind, raw_count, m, plan, ctx, excluded, rng)) {
            if (batch.size() >= step.count) {
                break;  // truncate to the first N_i ranked samples
            }
            if (invalid.count(iri) > 0 || negative_set.count(iri) > 0 ||
                !batch_set.insert(iri).second) {
                continue;
            }
            batch.push_back(iri);
        }
        if (batch.size() < step.count) {
            // Random top-up over the remaining valid universe.
            std::vector<std::string> pool;
            pool.reserve(universe.size());
            for (const auto& iri : universe) {
                if (invalid.count(iri) == 0 && negative_set.count(iri) == 0 &&
                    batch_set.count(iri) == 0) {
                    pool.push_back(iri);
                }
            }
            const std::size_t need = step.count - batch.size();
            for (std::size_t idx : rng.pick_indices(pool.size(), need)) {
                batch.push_back(pool[idx]);
            }
        }
        for (const auto& iri : batch) {
            negative_set.insert(iri);
        }
        negatives.insert(negatives.end(), batch.begin(), batch.end());
    }

    CandidateRecord record;
    record.mapping = m;
    record.candidates = std::move(negatives);
    return record;
}

std::string candidate_record_to_jsonl(const CandidateRecord& record) {
    ordered_json line;
    line["src"] = record.mapping.src;
    line["tgt"] = record.mapping.tgt;
    line["candidates"] = record.candidates;
    if (record.scored()) {
        line["scores"] = record.scores;
        line["tgt_score"] = *record.tgt_score;
    }
    return line.dump();
}

std::vector<CandidateRecord> read_candidates_jsonl(const std::filesystem::path& path,
                                                   MappingRelation relation) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open candidate file: " + path.string());
    }
    std::vector<CandidateRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("malformed JSON line: ") + e.what(), lineno, e.byte);
        }
        CandidateRecord record;
        if (!doc.contains("src") || !doc.contains("tgt") || !doc.contains("candidates")) {
            throw SchemaError("line " + std::to_string(lineno),
                              "candidate record needs src, tgt and candidates");
        }
        record.mapping.src = doc["src"].get<std::string>();
        record.mapping.tgt = doc["tgt"].get<std::string>();
        record.mapping.relation = relation;
        record.candidates = doc["candidates"].get<std::vector<std::string>>();
        if (doc.contains("scores")) {
            record.scores = doc["scores"].get<std::vector<double>>();
        }
        if (doc.contains("tgt_score")) {
            record.tgt_score = doc["tgt_score"].get<double>();
        }
        records.push_back(std::move(record));
    }
    return records;
}

void write_candidates_jsonl(const std::vector<CandidateRecord>& records,
                            const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write candidate file: " + path.string());
    }
    for (const auto& record : records) {
        out << candidate_record_to_jsonl(record) << "\n";
    }
}

}  // namespace ombench
