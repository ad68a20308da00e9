#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ombench/dataset.hpp"
#include "ombench/editsim.hpp"
#include "ombench/errors.hpp"
#include "ombench/fingerprint.hpp"
#include "ombench/hub_table.hpp"
#include "ombench/inverted_index.hpp"
#include "ombench/mapping.hpp"
#include "ombench/metrics.hpp"
#include "ombench/neg_sampling.hpp"
#include "ombench/ontology.hpp"
#include "ombench/parallel.hpp"
#include "ombench/preprocess.hpp"
#include "ombench/rdfxml.hpp"
#include "ombench/snapshot_json.hpp"
#include "ombench/tokenize.hpp"

namespace {

using namespace ombench;
using nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";

/// JSON config files for CLI11. Top-level keys address global options,
/// nested objects address subcommands. Command-line flags win.
class ConfigJson : public CLI::Config {
public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override {
        return "{}\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(input);
        } catch (const nlohmann::json::parse_error& e) {
            throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
        }
        if (!doc.is_object()) {
            throw CLI::ConversionError("config file must be a JSON object");
        }
        std::vector<CLI::ConfigItem> items;
        walk(doc, {}, "", items);
        return items;
    }

private:
    static std::string scalar(const nlohmann::json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
    }

    static void walk(const nlohmann::json& node, std::vector<std::string> parents,
                     const std::string& name, std::vector<CLI::ConfigItem>& items) {
        if (node.is_object()) {
            if (!name.empty()) {
                parents.push_back(name);
            }
            for (auto it = node.begin(); it != node.end(); ++it) {
                walk(it.value(), parents, it.key(), items);
            }
            return;
        }
        CLI::ConfigItem item;
        item.parents = std::move(parents);
        item.name = name;
        if (node.is_array()) {
            for (const auto& e : node) {
                item.inputs.push_back(scalar(e));
            }
        } else {
            item.inputs.push_back(scalar(node));
        }
        items.push_back(std::move(item));
    }
};

void write_json_file(const std::string& path, const ordered_json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path);
    }
    out << doc.dump(2) << "\n";
}

/// Collected facts about one run; rendered as "<primary>.manifest.json".
/// Thread counts are deliberately absent: outputs must not depend on them.
struct RunContext {
    std::string command;
    std::uint64_t seed = 42;
    ordered_json config = ordered_json::object();
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;

    void write_manifest(const std::string& primary_output) const {
        ordered_json doc;
        doc["tool"] = "ombench";
        doc["tool_version"] = kToolVersion;
        doc["command"] = command;
        doc["seed"] = seed;
        doc["config"] = config;
        ordered_json in = ordered_json::object();
        for (const auto& p : inputs) {
            in[p] = fingerprint_hex(file_fingerprint(p));
        }
        doc["inputs"] = in;
        ordered_json out = ordered_json::object();
        for (const auto& p : outputs) {
            out[p] = fingerprint_hex(file_fingerprint(p));
        }
        doc["outputs"] = out;
        write_json_file(primary_output + ".manifest.json", doc);
    }
};

std::set<std::string> read_iri_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::set<std::string> iris;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        std::size_t start = 0;
        while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) {
            ++start;
        }
        if (start >= line.size() || line[start] == '#') {
            continue;
        }
        iris.insert(line.substr(start));
    }
    return iris;
}

std::shared_ptr<const SubwordVocab> load_vocab(const std::string& path) {
    if (path.empty()) {
        return nullptr;
    }
    return std::make_shared<SubwordVocab>(SubwordVocab::load(path));
}

ordered_json string_list(const std::vector<std::string>& values) {
    return ordered_json(values);
}

// ---------------------------------------------------------------------------
// Subcommand argument bundles.

struct ImportArgs {
    std::string in, out, base_iri;
};

struct PreprocessArgs {
    std::string in, out;
    std::vector<std::string> xref_props, synonym_props;
    bool keep_deprecated = false;
};

struct PruneArgs {
    std::string in, preserve, out;
};

struct ExtractEquivArgs {
    std::string hub, src, tgt, src_id, tgt_id, out;
};

struct GenSubsArgs {
    std::string src, tgt, equiv, out_onto, out_subs;
};

struct SampleCandsArgs {
    std::string refs, tgt, out, vocab, equiv_refs, closure_onto;
    TaskType task = TaskType::equivalence;
    std::size_t idf = 0, neighbour = 0, random = 0, max_hops = 6;
    std::vector<std::string> synonym_props;
};

struct SplitArgs {
    std::string refs, out_prefix;
    SplitScheme scheme = SplitScheme::unsupervised;
    MappingRelation relation = MappingRelation::equivalence;
};

struct RankEvalArgs {
    std::string cands, out;
    MappingRelation relation = MappingRelation::equivalence;
    std::vector<std::size_t> ks{1, 5, 10};
};

struct MatchEvalArgs {
    std::string system, refs, test, out;
    MappingRelation relation = MappingRelation::equivalence;
    double beta = 1.0;
};

struct EditsimMatchArgs {
    std::string src, tgt, out, vocab;
    double threshold = 0.0;
    std::size_t candidate_k = 200;
    std::vector<std::string> synonym_props;
    bool all_above_threshold = false;
};

struct EditsimScoreArgs {
    std::string cands, src, tgt, out;
    MappingRelation relation = MappingRelation::equivalence;
    std::vector<std::string> synonym_props;
};

// ---------------------------------------------------------------------------
// Handlers.

void run_import(const ImportArgs& a, std::uint64_t seed) {
    const RdfXmlResult res = read_rdfxml(a.in, a.base_iri);
    write_snapshot_json(res.snapshot, a.out);
    write_json_file(a.out + ".report.json", res.report.to_json());

    RunContext ctx{"import", seed};
    ctx.config = {{"in", a.in}, {"base-iri", a.base_iri}, {"out", a.out}};
    ctx.inputs = {a.in};
    ctx.outputs = {a.out, a.out + ".report.json"};
    ctx.write_manifest(a.out);
}

void run_preprocess(const PreprocessArgs& a, std::uint64_t seed) {
    ImportConfig cfg;
    cfg.xref_properties = a.xref_props;
    cfg.synonym_properties = a.synonym_props;
    cfg.drop_deprecated = !a.keep_deprecated;
    cfg.validate();

    PreprocessReport rep;
    const OntologySnapshot result = preprocess(read_snapshot_json(a.in), cfg, &rep);
    write_snapshot_json(result, a.out);
    write_json_file(a.out + ".report.json",
                    {{"deprecated_removed", rep.deprecated_removed},
                     {"xref_lists_stripped", rep.xref_lists_stripped},
                     {"classes", result.size()}});

    RunContext ctx{"preprocess", seed};
    ctx.config = {{"in", a.in},
                  {"out", a.out},
                  {"xref-prop", string_list(a.xref_props)},
                  {"synonym-prop", string_list(a.synonym_props)},
                  {"keep-deprecated", a.keep_deprecated}};
    ctx.inputs = {a.in};
    ctx.outputs = {a.out, a.out + ".report.json"};
    ctx.write_manifest(a.out);
}

void run_prune(const PruneArgs& a, std::uint64_t seed) {
    const std::set<std::string> preserve = read_iri_lines(a.preserve);
    if (preserve.empty()) {
        std::cerr << "warning: empty preserve set; the pruned ontology will have no classes\n";
    }
    PruneReport rep;
    const OntologySnapshot result = prune(read_snapshot_json(a.in), preserve, &rep);
    write_snapshot_json(result, a.out);
    write_json_file(a.out + ".report.json",
                    {{"removed_classes", rep.removed_classes},
                     {"unknown_preserve_iris", rep.unknown_preserve_iris},
                     {"classes", result.size()}});

    RunContext ctx{"prune", seed};
    ctx.config = {{"in", a.in}, {"preserve", a.preserve}, {"out", a.out}};
    ctx.inputs = {a.in, a.preserve};
    ctx.outputs = {a.out, a.out + ".report.json"};
    ctx.write_manifest(a.out);
}

void run_extract_equiv(const ExtractEquivArgs& a, std::uint64_t seed) {
    const HubTable hub = HubTable::read_json(a.hub);
    const OntologySnapshot src = read_snapshot_json(a.src);
    const OntologySnapshot tgt = read_snapshot_json(a.tgt);
    EquivExtractReport rep;
    const MappingSet mappings = extract_equivalence(hub, a.src_id, src, a.tgt_id, tgt, &rep);
    mappings.write_tsv(a.out);
    write_json_file(a.out + ".report.json",
                    {{"mappings", mappings.size()},
                     {"hub_concepts_matched", rep.hub_concepts_matched},
                     {"hub_concepts_unmatched", rep.hub_concepts_unmatched},
                     {"pairs_dropped_missing_class", rep.pairs_dropped_missing_class},
                     {"invalid_entries", rep.invalid_entries}});

    RunContext ctx{"extract-equiv", seed};
    ctx.config = {{"hub", a.hub},   {"src", a.src},       {"tgt", a.tgt},
                  {"src-id", a.src_id}, {"tgt-id", a.tgt_id}, {"out", a.out}};
    ctx.inputs = {a.hub, a.src, a.tgt};
    ctx.outputs = {a.out, a.out + ".report.json"};
    ctx.write_manifest(a.out);
}

void run_gen_subs(const GenSubsArgs& a, std::uint64_t seed) {
    const OntologySnapshot src = read_snapshot_json(a.src);
    const OntologySnapshot tgt = read_snapshot_json(a.tgt);
    const MappingSet equiv = MappingSet::read_tsv(a.equiv, MappingRelation::equivalence);
    const SubsumptionBuildResult res = build_subsumption_dataset(src, tgt, equiv, seed);
    write_snapshot_json(res.modified_target, a.out_onto);
    res.subs_mappings.write_tsv(a.out_subs);
    write_json_file(a.out_subs + ".report.json", res.report_json());

    RunContext ctx{"gen-subs", seed};
    ctx.config = {{"src", a.src},
                  {"tgt", a.tgt},
                  {"equiv", a.equiv},
                  {"out-onto", a.out_onto},
                  {"out-subs", a.out_subs}};
    ctx.inputs = {a.src, a.tgt, a.equiv};
    ctx.outputs = {a.out_onto, a.out_subs, a.out_subs + ".report.json"};
    ctx.write_manifest(a.out_onto);
}

void run_sample_cands(const SampleCandsArgs& a, std::uint64_t seed, std::size_t jobs) {
    const MappingRelation rel = a.task == TaskType::subsumption ? MappingRelation::subsumption
                                                                : MappingRelation::equivalence;
    const MappingSet refs = MappingSet::read_tsv(a.refs, rel);
    const OntologySnapshot tgt = read_snapshot_json(a.tgt);
    const std::shared_ptr<const SubwordVocab> vocab = load_vocab(a.vocab);
    const InvertedIndex index = InvertedIndex::build(tgt, a.synonym_props, vocab);

    SamplingPlan plan;
    plan.seed = seed;
    plan.max_hops = a.max_hops;
    if (a.idf > 0) {
        plan.strategies.push_back({StrategyKind::idf, a.idf});
    }
    if (a.neighbour > 0) {
        plan.strategies.push_back({StrategyKind::neighbour, a.neighbour});
    }
    if (a.random > 0) {
        plan.strategies.push_back({StrategyKind::random, a.random});
    }
    if (plan.total() == 0) {
        throw OmError("sampling plan is empty; set --idf, --neighbour and/or --random");
    }

    SamplingContext ctx_s;
    ctx_s.target = &tgt;
    ctx_s.index = &index;
    ctx_s.refs = &refs;
    ctx_s.task = a.task;
    MappingSet equiv_refs;
    OntologySnapshot closure;
    if (a.task == TaskType::subsumption) {
        if (a.equiv_refs.empty()) {
            throw OmError("--equiv-refs is required for subsumption sampling");
        }
        equiv_refs = MappingSet::read_tsv(a.equiv_refs, MappingRelation::equivalence);
        ctx_s.equiv_refs = &equiv_refs;
        if (!a.closure_onto.empty()) {
            closure = read_snapshot_json(a.closure_onto);
            ctx_s.closure_target = &closure;
        }
    }

    const std::vector<Mapping>& items = refs.items();
    std::vector<CandidateRecord> records(items.size());
    parallel_for(items.size(), jobs, [&](std::size_t i) {
        records[i] = generate_negative_candidates(items[i], plan, ctx_s);
    });
    write_candidates_jsonl(records, a.out);

    RunContext ctx{"sample-cands", seed};
    ctx.config = {{"refs", a.refs},
                  {"tgt", a.tgt},
                  {"out", a.out},
                  {"task", a.task == TaskType::subsumption ? "subsumption" : "equivalence"},
                  {"idf", a.idf},
                  {"neighbour", a.neighbour},
                  {"random", a.random},
                  {"max-hops", a.max_hops},
                  {"vocab", a.vocab},
                  {"synonym-prop", string_list(a.synonym_props)},
                  {"equiv-refs", a.equiv_refs},
                  {"closure-onto", a.closure_onto}};
    ctx.inputs = {a.refs, a.tgt};
    if (!a.vocab.empty()) {
        ctx.inputs.push_back(a.vocab);
    }
    if (!a.equiv_refs.empty()) {
        ctx.inputs.push_back(a.equiv_refs);
    }
    if (!a.closure_onto.empty()) {
        ctx.inputs.push_back(a.closure_onto);
    }
    ctx.outputs = {a.out};
    ctx.write_manifest(a.out);
}

void run_split(const SplitArgs& a, std::uint64_t seed) {
    const MappingSet refs = MappingSet::read_tsv(a.refs, a.relation);
    if (refs.size() < 10) {
        std::cerr << "warning: only " << refs.size()
                  << " reference mappings; split ratios will be coarse\n";
    }
    const SplitBundle bundle = split_references(refs, a.scheme, seed);
    const std::string train_path = a.out_prefix + ".train.tsv";
    const std::string val_path = a.out_prefix + ".val.tsv";
    const std::string test_path = a.out_prefix + ".test.tsv";
    bundle.train.write_tsv(train_path);
    bundle.val.write_tsv(val_path);
    bundle.test.write_tsv(test_path);

    RunContext ctx{"split", seed};
    ctx.config = {{"refs", a.refs},
                  {"out-prefix", a.out_prefix},
                  {"scheme", to_string(a.scheme)},
                  {"relation", to_string(a.relation)},
                  {"sizes",
                   {{"train", bundle.train.size()},
                    {"val", bundle.val.size()},
                    {"test", bundle.test.size()}}}};
    ctx.inputs = {a.refs};
    ctx.outputs = {train_path, val_path, test_path};
    ctx.write_manifest(a.out_prefix);
}

void run_rank_eval(const RankEvalArgs& a, std::uint64_t seed) {
    const std::vector<CandidateRecord> records = read_candidates_jsonl(a.cands, a.relation);
    const RankingReport rep = local_ranking_metrics(records, a.ks);
    if (rep.skipped > 0) {
        std::cerr << "warning: " << rep.skipped << " candidate records lack scores; excluded\n";
    }

    ordered_json doc;
    doc["MRR"] = rep.mrr;
    ordered_json hits = ordered_json::object();
    for (const auto& [k, v] : rep.hits) {
        hits[std::to_string(k)] = v;
    }
    doc["Hits"] = hits;
    doc["P"] = nullptr;
    doc["R"] = nullptr;
    doc["F1"] = nullptr;
    doc["n"] = rep.n;
    doc["skipped"] = rep.skipped;
    write_json_file(a.out, doc);

    RunContext ctx{"rank-eval", seed};
    ctx.config = {{"cands", a.cands},
                  {"out", a.out},
                  {"relation", to_string(a.relation)},
                  {"k", ordered_json(a.ks)}};
    ctx.inputs = {a.cands};
    ctx.outputs = {a.out};
    ctx.write_manifest(a.out);
}

void run_match_eval(const MatchEvalArgs& a, std::uint64_t seed) {
    const MappingSet system = MappingSet::read_tsv(a.system, a.relation);
    const MappingSet refs = MappingSet::read_tsv(a.refs, a.relation);
    std::optional<MappingSet> test;
    if (!a.test.empty()) {
        test = MappingSet::read_tsv(a.test, a.relation);
        for (const auto& m : *test) {
            if (!refs.contains(m.src, m.tgt)) {
                throw OmError("eval subset mapping not in the reference set: " + m.src + " -> " +
                              m.tgt);
            }
        }
    }
    const bool suppress = a.relation == MappingRelation::subsumption;
    const MatchReport rep = global_matching_metrics(system, refs, test ? &*test : nullptr, a.beta,
                                                    suppress);

    ordered_json doc;
    doc["MRR"] = nullptr;
    doc["Hits"] = nullptr;
    doc["P"] = rep.precision;
    if (suppress) {
        doc["R"] = nullptr;
        doc["F1"] = nullptr;
    } else {
        doc["R"] = rep.recall;
        doc["F1"] = rep.f_beta;
    }
    doc["beta"] = rep.beta;
    doc["adjusted"] = test.has_value();
    doc["out_size"] = rep.out_size;
    doc["ref_size"] = rep.ref_size;
    doc["intersection"] = rep.intersection;
    doc["empty_output"] = rep.empty_output;
    write_json_file(a.out, doc);

    RunContext ctx{"match-eval", seed};
    ctx.config = {{"system", a.system}, {"refs", a.refs},
                  {"test", a.test},     {"out", a.out},
                  {"beta", a.beta},     {"relation", to_string(a.relation)}};
    ctx.inputs = {a.system, a.refs};
    if (!a.test.empty()) {
        ctx.inputs.push_back(a.test);
    }
    ctx.outputs = {a.out};
    ctx.write_manifest(a.out);
}

void run_editsim_match(const EditsimMatchArgs& a, std::uint64_t seed, std::size_t jobs) {
    const OntologySnapshot src = read_snapshot_json(a.src);
    const OntologySnapshot tgt = read_snapshot_json(a.tgt);
    const InvertedIndex index = InvertedIndex::build(tgt, a.synonym_props, load_vocab(a.vocab));

    MatcherConfig cfg;
    cfg.threshold = a.threshold;
    cfg.candidate_k = a.candidate_k;
    cfg.synonym_properties = a.synonym_props;
    cfg.all_above_threshold = a.all_above_threshold;
    const EditSimMatchResult res = editsim_match(src, tgt, index, cfg, jobs);
    res.mappings.write_tsv(a.out);
    write_json_file(a.out + ".report.json",
                    {{"mappings", res.mappings.size()},
                     {"skipped_no_labels", res.skipped_no_labels}});

    RunContext ctx{"editsim-match", seed};
    ctx.config = {{"src", a.src},
                  {"tgt", a.tgt},
                  {"out", a.out},
                  {"threshold", a.threshold},
                  {"candidate-k", a.candidate_k},
                  {"synonym-prop", string_list(a.synonym_props)},
                  {"vocab", a.vocab},
                  {"all-above-threshold", a.all_above_threshold}};
    ctx.inputs = {a.src, a.tgt};
    if (!a.vocab.empty()) {
        ctx.inputs.push_back(a.vocab);
    }
    ctx.outputs = {a.out, a.out + ".report.json"};
    ctx.write_manifest(a.out);
}

void run_editsim_score(const EditsimScoreArgs& a, std::uint64_t seed, std::size_t jobs) {
    const std::vector<CandidateRecord> records = read_candidates_jsonl(a.cands, a.relation);
    const OntologySnapshot src = read_snapshot_json(a.src);
    const OntologySnapshot tgt = read_snapshot_json(a.tgt);
    const EditSimScoreResult res =
        editsim_score_candidates(records, src, tgt, a.synonym_props, jobs);
    if (res.dropped_unknown > 0) {
        std::cerr << "warning: " << res.dropped_unknown
                  << " candidate records name unknown classes; dropped\n";
    }
    write_candidates_jsonl(res.records, a.out);
    write_json_file(a.out + ".report.json",
                    {{"records", res.records.size()}, {"dropped_unknown", res.dropped_unknown}});

    RunContext ctx{"editsim-score", seed};
    ctx.config = {{"cands", a.cands},
                  {"src", a.src},
                  {"tgt", a.tgt},
                  {"out", a.out},
                  {"relation", to_string(a.relation)},
                  {"synonym-prop", string_list(a.synonym_props)}};
    ctx.inputs = {a.cands, a.src, a.tgt};
    ctx.outputs = {a.out, a.out + ".report.json"};
    ctx.write_manifest(a.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ontology matching benchmark toolkit"};
    app.name("ombench");
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    app.config_formatter(std::make_shared<ConfigJson>());
    app.set_config("--config", "", "JSON config file (command-line flags win)");

    std::uint64_t seed = 42;
    std::size_t jobs = 1;
    app.add_option("--seed", seed, "Global random seed")->capture_default_str();
    app.add_option("--jobs", jobs, "Worker threads for parallel steps")->capture_default_str();

    const std::map<std::string, MappingRelation> relation_names{
        {"equivalence", MappingRelation::equivalence},
        {"equiv", MappingRelation::equivalence},
        {"subsumption", MappingRelation::subsumption},
        {"subs", MappingRelation::subsumption}};
    const std::map<std::string, TaskType> task_names{{"equivalence", TaskType::equivalence},
                                                     {"equiv", TaskType::equivalence},
                                                     {"subsumption", TaskType::subsumption},
                                                     {"subs", TaskType::subsumption}};
    const std::map<std::string, SplitScheme> scheme_names{
        {"unsupervised", SplitScheme::unsupervised},
        {"unsup", SplitScheme::unsupervised},
        {"semi_supervised", SplitScheme::semi_supervised},
        {"semi-supervised", SplitScheme::semi_supervised},
        {"semi", SplitScheme::semi_supervised}};

    ImportArgs import_args;
    auto* import_cmd = app.add_subcommand("import", "Parse RDF/XML into a canonical JSON snapshot");
    import_cmd->fallthrough();
    import_cmd->add_option("--in", import_args.in, "RDF/XML ontology file")->required();
    import_cmd->add_option("--out", import_args.out, "Output snapshot JSON")->required();
    import_cmd->add_option("--base-iri", import_args.base_iri,
                           "Base IRI for resolving relative references");

    PreprocessArgs preprocess_args;
    auto* preprocess_cmd =
        app.add_subcommand("preprocess", "Drop deprecated classes and strip cross-references");
    preprocess_cmd->fallthrough();
    preprocess_cmd->add_option("--in", preprocess_args.in, "Input snapshot JSON")->required();
    preprocess_cmd->add_option("--out", preprocess_args.out, "Output snapshot JSON")->required();
    preprocess_cmd->add_option("--xref-prop", preprocess_args.xref_props,
                               "Cross-reference property IRIs to strip");
    preprocess_cmd->add_option("--synonym-prop", preprocess_args.synonym_props,
                               "Synonym property IRIs to retain");
    preprocess_cmd->add_flag("--keep-deprecated", preprocess_args.keep_deprecated,
                             "Keep deprecated classes");

    PruneArgs prune_args;
    auto* prune_cmd = app.add_subcommand("prune", "Prune to a preserved class set");
    prune_cmd->fallthrough();
    prune_cmd->add_option("--in", prune_args.in, "Input snapshot JSON")->required();
    prune_cmd->add_option("--preserve", prune_args.preserve, "File of IRIs to keep, one per line")
        ->required();
    prune_cmd->add_option("--out", prune_args.out, "Output snapshot JSON")->required();

    ExtractEquivArgs extract_args;
    auto* extract_cmd =
        app.add_subcommand("extract-equiv", "Equivalence mappings from a hub cross-reference table");
    extract_cmd->fallthrough();
    extract_cmd->add_option("--hub", extract_args.hub, "Hub table JSON")->required();
    extract_cmd->add_option("--src", extract_args.src, "Source snapshot JSON")->required();
    extract_cmd->add_option("--tgt", extract_args.tgt, "Target snapshot JSON")->required();
    extract_cmd->add_option("--src-id", extract_args.src_id, "Source ontology id in the hub table")
        ->required();
    extract_cmd->add_option("--tgt-id", extract_args.tgt_id, "Target ontology id in the hub table")
        ->required();
    extract_cmd->add_option("--out", extract_args.out, "Output mapping TSV")->required();

    GenSubsArgs gensubs_args;
    auto* gensubs_cmd =
        app.add_subcommand("gen-subs", "Subsumption mappings via seeded class deletion");
    gensubs_cmd->fallthrough();
    gensubs_cmd->add_option("--src", gensubs_args.src, "Source snapshot JSON")->required();
    gensubs_cmd->add_option("--tgt", gensubs_args.tgt, "Target snapshot JSON")->required();
    gensubs_cmd->add_option("--equiv", gensubs_args.equiv, "Equivalence reference TSV")->required();
    gensubs_cmd->add_option("--out-onto", gensubs_args.out_onto, "Modified target snapshot JSON")
        ->required();
    gensubs_cmd->add_option("--out-subs", gensubs_args.out_subs, "Subsumption mapping TSV")
        ->required();

    SampleCandsArgs sample_args;
    auto* sample_cmd =
        app.add_subcommand("sample-cands", "Negative candidates for each reference mapping");
    sample_cmd->fallthrough();
    sample_cmd->add_option("--refs", sample_args.refs, "Reference mapping TSV")->required();
    sample_cmd->add_option("--tgt", sample_args.tgt, "Target snapshot JSON (candidate universe)")
        ->required();
    sample_cmd->add_option("--out", sample_args.out, "Output candidate JSONL")->required();
    sample_cmd->add_option("--task", sample_args.task, "Task type")
        ->transform(CLI::CheckedTransformer(task_names, CLI::ignore_case));
    sample_cmd->add_option("--idf", sample_args.idf, "Candidates via idf similarity");
    sample_cmd->add_option("--neighbour", sample_args.neighbour, "Candidates via hierarchy BFS");
    sample_cmd->add_option("--random", sample_args.random, "Candidates via uniform draws");
    sample_cmd->add_option("--max-hops", sample_args.max_hops, "BFS hop limit")
        ->capture_default_str();
    sample_cmd->add_option("--vocab", sample_args.vocab, "Sub-word vocabulary file");
    sample_cmd->add_option("--synonym-prop", sample_args.synonym_props,
                           "Label property IRIs (default: all)");
    sample_cmd->add_option("--equiv-refs", sample_args.equiv_refs,
                           "Equivalence TSV (required for subsumption)");
    sample_cmd->add_option("--closure-onto", sample_args.closure_onto,
                           "Pre-deletion target snapshot for subsumer closure");

    SplitArgs split_args;
    auto* split_cmd = app.add_subcommand("split", "Deterministic train/val/test split");
    split_cmd->fallthrough();
    split_cmd->add_option("--refs", split_args.refs, "Reference mapping TSV")->required();
    split_cmd->add_option("--out-prefix", split_args.out_prefix,
                          "Prefix for <prefix>.{train,val,test}.tsv")
        ->required();
    split_cmd->add_option("--scheme", split_args.scheme, "unsupervised (10/90) or semi (20/10/70)")
        ->transform(CLI::CheckedTransformer(scheme_names, CLI::ignore_case));
    split_cmd->add_option("--relation", split_args.relation, "Mapping relation of the TSV")
        ->transform(CLI::CheckedTransformer(relation_names, CLI::ignore_case));

    RankEvalArgs rank_args;
    auto* rank_cmd = app.add_subcommand("rank-eval", "MRR and Hits@K over scored candidates");
    rank_cmd->fallthrough();
    rank_cmd->add_option("--cands", rank_args.cands, "Scored candidate JSONL")->required();
    rank_cmd->add_option("--out", rank_args.out, "Output report JSON")->required();
    rank_cmd->add_option("--k", rank_args.ks, "Hits@K cutoffs")->capture_default_str();
    rank_cmd->add_option("--relation", rank_args.relation, "Mapping relation of the records")
        ->transform(CLI::CheckedTransformer(relation_names, CLI::ignore_case));

    MatchEvalArgs match_args;
    auto* match_cmd = app.add_subcommand("match-eval", "Precision/recall/F against references");
    match_cmd->fallthrough();
    match_cmd->add_option("--system", match_args.system, "System output TSV")->required();
    match_cmd->add_option("--refs", match_args.refs, "Full reference TSV")->required();
    match_cmd->add_option("--test", match_args.test,
                          "Eval subset TSV (enables adjusted precision)");
    match_cmd->add_option("--out", match_args.out, "Output report JSON")->required();
    match_cmd->add_option("--beta", match_args.beta, "F-score beta")->capture_default_str();
    match_cmd->add_option("--relation", match_args.relation,
                          "Mapping relation (subsumption suppresses recall)")
        ->transform(CLI::CheckedTransformer(relation_names, CLI::ignore_case));

    EditsimMatchArgs esmatch_args;
    auto* esmatch_cmd = app.add_subcommand("editsim-match", "EditSim baseline matcher");
    esmatch_cmd->fallthrough();
    esmatch_cmd->add_option("--src", esmatch_args.src, "Source snapshot JSON")->required();
    esmatch_cmd->add_option("--tgt", esmatch_args.tgt, "Target snapshot JSON")->required();
    esmatch_cmd->add_option("--out", esmatch_args.out, "Output mapping TSV")->required();
    esmatch_cmd->add_option("--threshold", esmatch_args.threshold, "Minimum similarity kept")
        ->capture_default_str();
    esmatch_cmd->add_option("--candidate-k", esmatch_args.candidate_k,
                            "Index candidates per source class")
        ->capture_default_str();
    esmatch_cmd->add_option("--synonym-prop", esmatch_args.synonym_props,
                            "Label property IRIs (default: all)");
    esmatch_cmd->add_option("--vocab", esmatch_args.vocab, "Sub-word vocabulary file");
    esmatch_cmd->add_flag("--all-above-threshold", esmatch_args.all_above_threshold,
                          "Emit every pair at or above the threshold");

    EditsimScoreArgs esscore_args;
    auto* esscore_cmd =
        app.add_subcommand("editsim-score", "Attach EditSim scores to candidate records");
    esscore_cmd->fallthrough();
    esscore_cmd->add_option("--cands", esscore_args.cands, "Candidate JSONL")->required();
    esscore_cmd->add_option("--src", esscore_args.src, "Source snapshot JSON")->required();
    esscore_cmd->add_option("--tgt", esscore_args.tgt, "Target snapshot JSON")->required();
    esscore_cmd->add_option("--out", esscore_args.out, "Output scored JSONL")->required();
    esscore_cmd->add_option("--synonym-prop", esscore_args.synonym_props,
                            "Label property IRIs (default: all)");
    esscore_cmd->add_option("--relation", esscore_args.relation, "Mapping relation of the records")
        ->transform(CLI::CheckedTransformer(relation_names, CLI::ignore_case));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (import_cmd->parsed()) {
            run_import(import_args, seed);
        } else if (preprocess_cmd->parsed()) {
            run_preprocess(preprocess_args, seed);
        } else if (prune_cmd->parsed()) {
            run_prune(prune_args, seed);
        } else if (extract_cmd->parsed()) {
            run_extract_equiv(extract_args, seed);
        } else if (gensubs_cmd->parsed()) {
            run_gen_subs(gensubs_args, seed);
        } else if (sample_cmd->parsed()) {
            run_sample_cands(sample_args, seed, jobs);
        } else if (split_cmd->parsed()) {
            run_split(split_args, seed);
        } else if (rank_cmd->parsed()) {
            run_rank_eval(rank_args, seed);
        } else if (match_cmd->parsed()) {
            run_match_eval(match_args, seed);
        } else if (esmatch_cmd->parsed()) {
            run_editsim_match(esmatch_args, seed, jobs);
        } else if (esscore_cmd->parsed()) {
            run_editsim_score(esscore_args, seed, jobs);
        }
    } catch (const OmError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
