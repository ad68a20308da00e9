#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "ombench/editsim.hpp"
#include "ombench/errors.hpp"
#include "oracles.hpp"

using namespace ombench;

namespace {

constexpr const char* kLabel = "http://www.w3.org/2000/01/rdf-schema#label";
constexpr const char* kSyn = "http://example.org/vocab#synonym";

ClassRecord labeled_class(std::string iri, std::vector<std::string> labels,
                          const char* prop = kLabel) {
    ClassRecord rec;
    rec.iri = std::move(iri);
    if (!labels.empty()) {
        rec.labels[prop] = std::move(labels);
    }
    return rec;
}

}  // namespace

TEST_CASE("levenshtein basics") {
    CHECK(levenshtein("kitten", "sitting") == 3);
    CHECK(levenshtein("", "") == 0);
    CHECK(levenshtein("abc", "") == 3);
    CHECK(levenshtein("", "abc") == 3);
    CHECK(levenshtein("same", "same") == 0);
    CHECK(levenshtein("ab", "ba") == 2);
}

TEST_CASE("levenshtein counts code points, not bytes") {
    // e-acute is two bytes but one code point.
    CHECK(levenshtein("caf\xC3\xA9", "cafe") == 1);
    CHECK(levenshtein("caf\xC3\xA9", "caf\xC3\xA9") == 0);
    CHECK(levenshtein("\xE2\x82\xAC", "") == 1);  // euro sign
}

TEST_CASE("levenshtein agrees with the full-matrix oracle") {
    std::mt19937_64 rng(111);
    for (int round = 0; round < 400; ++round) {
        const std::string a = testutil::random_string(rng, 18);
        const std::string b = testutil::random_string(rng, 18);
        CHECK(levenshtein(a, b) == testutil::levenshtein_matrix(a, b));
    }
}

TEST_CASE("edit similarity follows 1 - d/maxlen on the best label pair") {
    CHECK(edit_similarity({"kitten"}, {"sitting"}) == doctest::Approx(1.0 - 3.0 / 7.0));
    CHECK(edit_similarity({"cardiac arrest", "heart attack"}, {"heart attack"}) ==
          doctest::Approx(1.0));
    CHECK(edit_similarity({"abc"}, {"xyz"}) == doctest::Approx(0.0));
}

TEST_CASE("labels are normalized before comparison") {
    CHECK(edit_similarity({"  Heart   Attack "}, {"heart attack"}) == doctest::Approx(1.0));
    CHECK(edit_similarity({"HEART"}, {"heart"}) == doctest::Approx(1.0));
}

TEST_CASE("empty label lists score zero and set the flag") {
    bool flag = false;
    CHECK(edit_similarity({}, {"something"}, &flag) == 0.0);
    CHECK(flag);

    flag = false;
    CHECK(edit_similarity({"something"}, {}, &flag) == 0.0);
    CHECK(flag);

    // Labels that normalize to nothing count as missing too.
    flag = false;
    CHECK(edit_similarity({"   "}, {"x"}, &flag) == 0.0);
    CHECK(flag);

    flag = true;
    edit_similarity({"a"}, {"b"}, &flag);
    CHECK_FALSE(flag);
}

TEST_CASE("edit similarity is symmetric, bounded, and exact for identical pairs") {
    std::mt19937_64 rng(222);
    for (int round = 0; round < 200; ++round) {
        const std::vector<std::string> a = {testutil::random_string(rng, 12),
                                            testutil::random_string(rng, 12)};
        const std::vector<std::string> b = {testutil::random_string(rng, 12)};
        const double ab = edit_similarity(a, b);
        const double ba = edit_similarity(b, a);
        CHECK(ab == doctest::Approx(ba));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
    }
    CHECK(edit_similarity({"exact match"}, {"noise", "exact match"}) == doctest::Approx(1.0));
}

TEST_CASE("matcher config validation") {
    MatcherConfig ok;
    CHECK_NOTHROW(ok.validate());
    MatcherConfig over;
    over.threshold = 1.01;  // allowed: it simply yields an empty result
    CHECK_NOTHROW(over.validate());
    MatcherConfig negative;
    negative.threshold = -0.1;
    CHECK_THROWS_AS(negative.validate(), OmError);
    MatcherConfig zero_k;
    zero_k.candidate_k = 0;
    CHECK_THROWS_AS(zero_k.validate(), OmError);
}

TEST_CASE("editsim_match pairs classes by best label similarity") {
    const OntologySnapshot src = OntologySnapshot::build(
        "http://example.org/src",
        {labeled_class("http://s/heart", {"heart"}),
         labeled_class("http://s/kidney", {"kidney"})});
    const OntologySnapshot tgt = OntologySnapshot::build(
        "http://example.org/tgt",
        {labeled_class("http://t/heart", {"heart"}),
         labeled_class("http://t/kidneys", {"kidneys"}),
         labeled_class("http://t/liver", {"liver"})});
    const InvertedIndex index = InvertedIndex::build(tgt, {});

    MatcherConfig cfg;
    cfg.threshold = 0.5;
    const EditSimMatchResult result = editsim_match(src, tgt, index, cfg);
    CHECK(result.mappings.size() == 2);
    CHECK(result.mappings.contains("http://s/heart", "http://t/heart"));
    CHECK(result.mappings.contains("http://s/kidney", "http://t/kidneys"));
    CHECK(result.mappings.find("http://s/heart", "http://t/heart")->score == 1.0);
    CHECK(result.mappings.find("http://s/kidney", "http://t/kidneys")->score ==
          doctest::Approx(6.0 / 7.0));
}

TEST_CASE("a threshold above one yields an empty result") {
    const OntologySnapshot src = OntologySnapshot::build(
        "http://example.org/src", {labeled_class("http://s/a", {"identical"})});
    const OntologySnapshot tgt = OntologySnapshot::build(
        "http://example.org/tgt", {labeled_class("http://t/a", {"identical"})});
    const InvertedIndex index = InvertedIndex::build(tgt, {});
    MatcherConfig cfg;
    cfg.threshold = 1.01;
    CHECK(editsim_match(src, tgt, index, cfg).mappings.empty());
}

TEST_CASE("score ties resolve to the lexicographically smaller target IRI") {
    const OntologySnapshot src = OntologySnapshot::build(
        "http://example.org/src", {labeled_class("http://s/q", {"ab"})});
    // Both targets reach similarity 0.5, but the shared token "ab" ranks
    // t/zzz ahead in candidate order, so the smaller IRI must win through
    // the tie-break rather than through iteration order.
    const OntologySnapshot tgt = OntologySnapshot::build(
        "http://example.org/tgt", {labeled_class("http://t/zzz", {"ac", "ab zz"}),
                                   labeled_class("http://t/aaa", {"ad"})});
    const InvertedIndex index = InvertedIndex::build(tgt, {});
    CHECK(index.idf_sample(index.class_tokens(src, "http://s/q"), 2) ==
          std::vector<std::string>{"http://t/zzz", "http://t/aaa"});
    MatcherConfig cfg;
    cfg.threshold = 0.1;
    const EditSimMatchResult result = editsim_match(src, tgt, index, cfg);
    REQUIRE(result.mappings.size() == 1);
    CHECK(result.mappings.items()[0].tgt == "http://t/aaa");
    CHECK(result.mappings.items()[0].score == 0.5);
}

TEST_CASE("all_above_threshold emits every qualifying pair") {
    const OntologySnapshot src = OntologySnapshot::build(
        "http://example.org/src", {labeled_class("http://s/q", {"heart"})});
    const OntologySnapshot tgt = OntologySnapshot::build(
        "http://example.org/tgt", {labeled_class("http://t/a", {"heart"}),
                                   labeled_class("http://t/b", {"hearts"}),
                                   labeled_class("http://t/c", {"liver"})});
    const InvertedIndex index = InvertedIndex::build(tgt, {});
    MatcherConfig cfg;
    cfg.threshold = 0.5;
    cfg.all_above_threshold = true;
    const EditSimMatchResult result = editsim_match(src, tgt, index, cfg);
    CHECK(result.mappings.size() == 2);
    CHECK(result.mappings.contains("http://s/q", "http://t/a"));
    CHECK(result.mappings.contains("http://s/q", "http://t/b"));
}

TEST_CASE("sources without labels are skipped and counted") {
    const OntologySnapshot src = OntologySnapshot::build(
        "http://example.org/src",
        {labeled_class("http://s/mute", {}), labeled_class("http://s/ok", {"liver"})});
    const OntologySnapshot tgt = OntologySnapshot::build(
        "http://example.org/tgt", {labeled_class("http://t/liver", {"liver"})});
    const InvertedIndex index = InvertedIndex::build(tgt, {});
    MatcherConfig cfg;
    cfg.threshold = 0.9;
    const EditSimMatchResult result = editsim_match(src, tgt, index, cfg);
    CHECK(result.skipped_no_labels == 1);
    CHECK(result.mappings.size() == 1);
}

TEST_CASE("synonym property selection changes which labels are compared") {
    ClassRecord s;
    s.iri = "http://s/a";
    s.labels[kLabel] = {"official name"};
    s.labels[kSyn] = {"nick"};
    const OntologySnapshot src = OntologySnapshot::build("http://example.org/src", {s});
    const OntologySnapshot tgt = OntologySnapshot::build(
        "http://example.org/tgt", {labeled_class("http://t/a", {"nick"}, kSyn)});

    MatcherConfig cfg;
    cfg.threshold = 0.99;
    cfg.synonym_properties = {kSyn};
    const InvertedIndex index = InvertedIndex::build(tgt, cfg.synonym_properties);
    const EditSimMatchResult with_syn = editsim_match(src, tgt, index, cfg);
    CHECK(with_syn.mappings.size() == 1);

    MatcherConfig label_only = cfg;
    label_only.synonym_properties = {kLabel};
    const InvertedIndex label_index = InvertedIndex::build(tgt, label_only.synonym_properties);
    const EditSimMatchResult without = editsim_match(src, tgt, label_index, label_only);
    CHECK(without.mappings.empty());
    // The source still has an rdfs:label, so nothing is skipped; the
    // label-less target simply never qualifies.
    CHECK(without.skipped_no_labels == 0);
}

TEST_CASE("matcher output is identical across job counts") {
    std::mt19937_64 rng(333);
    const OntologySnapshot src = testutil::random_dag(rng, 40);
    const OntologySnapshot tgt = testutil::random_dag(rng, 45);
    const InvertedIndex index = InvertedIndex::build(tgt, {});
    MatcherConfig cfg;
    cfg.threshold = 0.3;
    cfg.candidate_k = 20;
    const EditSimMatchResult one = editsim_match(src, tgt, index, cfg, 1);
    const EditSimMatchResult eight = editsim_match(src, tgt, index, cfg, 8);
    CHECK(one.mappings == eight.mappings);
    CHECK(one.skipped_no_labels == eight.skipped_no_labels);
    for (const auto& m : one.mappings) {
        CHECK(m.score == eight.mappings.find(m.src, m.tgt)->score);
    }
}

TEST_CASE("planted identical labels are recovered at a high threshold") {
    std::vector<ClassRecord> src_records;
    std::vector<ClassRecord> tgt_records;
    for (int i = 0; i < 8; ++i) {
        const std::string label = "planted label " + std::to_string(i);
        src_records.push_back(labeled_class("http://s/c" + std::to_string(i), {label}));
        tgt_records.push_back(labeled_class("http://t/c" + std::to_string(i), {label}));
    }
    const OntologySnapshot src =
        OntologySnapshot::build("http://example.org/src", std::move(src_records));
    const OntologySnapshot tgt =
        OntologySnapshot::build("http://example.org/tgt", std::move(tgt_records));
    const InvertedIndex index = InvertedIndex::build(tgt, {});
    MatcherConfig cfg;
    cfg.threshold = 0.9;
    const EditSimMatchResult result = editsim_match(src, tgt, index, cfg);
    REQUIRE(result.mappings.size() == 8);
    for (int i = 0; i < 8; ++i) {
        CHECK(result.mappings.contains("http://s/c" + std::to_string(i),
                                       "http://t/c" + std::to_string(i)));
    }
}

TEST_CASE("editsim_score_candidates attaches scores and drops unknown classes") {
    const OntologySnapshot src = OntologySnapshot::build(
        "http://example.org/src", {labeled_class("http://s/a", {"heart"})});
    const OntologySnapshot tgt = OntologySnapshot::build(
        "http://example.org/tgt", {labeled_class("http://t/pos", {"heart"}),
                                   labeled_class("http://t/n1", {"hearts"}),
                                   labeled_class("http://t/n2", {"liver"})});

    CandidateRecord good;
    good.mapping = Mapping{"http://s/a", "http://t/pos", MappingRelation::equivalence, {}};
    good.candidates = {"http://t/n1", "http://t/n2"};

    CandidateRecord bad_src = good;
    bad_src.mapping.src = "http://s/ghost";
    CandidateRecord bad_cand = good;
    bad_cand.candidates = {"http://t/n1", "http://t/ghost"};

    const EditSimScoreResult result =
        editsim_score_candidates({good, bad_src, bad_cand}, src, tgt, {});
    CHECK(result.dropped_unknown == 2);
    REQUIRE(result.records.size() == 1);
    const CandidateRecord& scored = result.records[0];
    REQUIRE(scored.scored());
    CHECK(*scored.tgt_score == doctest::Approx(1.0));
    CHECK(scored.scores[0] == doctest::Approx(5.0 / 6.0));  // heart vs hearts
    CHECK(scored.scores[1] == 0.0);  // heart vs liver share no alignment
}

TEST_CASE("scoring preserves input order and is parallel-safe") {
    std::mt19937_64 rng(444);
    const OntologySnapshot src = testutil::random_dag(rng, 25);
    const OntologySnapshot tgt = testutil::random_dag(rng, 25);
    const std::vector<std::string> src_iris = src.class_iris();
    const std::vector<std::string> tgt_iris = tgt.class_iris();

    std::vector<CandidateRecord> records;
    for (std::size_t i = 0; i < src_iris.size(); ++i) {
        CandidateRecord rec;
        rec.mapping = Mapping{src_iris[i], tgt_iris[i % tgt_iris.size()],
                              MappingRelation::equivalence, {}};
        for (int j = 0; j < 4; ++j) {
            rec.candidates.push_back(tgt_iris[(i + j + 1) % tgt_iris.size()]);
        }
        records.push_back(std::move(rec));
    }
    const EditSimScoreResult one = editsim_score_candidates(records, src, tgt, {}, 1);
    const EditSimScoreResult four = editsim_score_candidates(records, src, tgt, {}, 4);
    REQUIRE(one.records.size() == four.records.size());
    for (std::size_t i = 0; i < one.records.size(); ++i) {
        CHECK(one.records[i].mapping.src == records[i].mapping.src);
        CHECK(one.records[i].scores == four.records[i].scores);
        CHECK(*one.records[i].tgt_score == *four.records[i].tgt_score);
    }
}
