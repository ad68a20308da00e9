#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ombench/mapping.hpp"
#include "ombench/errors.hpp"

using namespace ombench;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ombench_test_" + name);
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    out << bytes;
}

}  // namespace

TEST_CASE("relation names round-trip and aliases parse") {
    CHECK(to_string(MappingRelation::equivalence) == "equivalence");
    CHECK(to_string(MappingRelation::subsumption) == "subsumption");
    CHECK(relation_from_string("equivalence") == MappingRelation::equivalence);
    CHECK(relation_from_string("equiv") == MappingRelation::equivalence);
    CHECK(relation_from_string("subsumption") == MappingRelation::subsumption);
    CHECK(relation_from_string("subs") == MappingRelation::subsumption);
    CHECK_THROWS_AS(relation_from_string("nope"), OmError);
}

TEST_CASE("add keeps mappings sorted and deduplicated, first score wins") {
    MappingSet set;
    set.add("b", "y", 0.5);
    set.add("a", "z", 0.9);
    set.add("a", "x");
    set.add("a", "z", 0.1);  // duplicate pair: ignored
    REQUIRE(set.size() == 3);
    CHECK(set.items()[0].src == "a");
    CHECK(set.items()[0].tgt == "x");
    CHECK(set.items()[1].tgt == "z");
    CHECK(set.items()[2].src == "b");
    CHECK(set.find("a", "z")->score == 0.9);
    CHECK_FALSE(set.items()[0].score.has_value());
    CHECK(set.contains("b", "y"));
    CHECK_FALSE(set.contains("b", "z"));
}

TEST_CASE("targets_of returns every paired target in order") {
    MappingSet set;
    set.add("s", "t2");
    set.add("s", "t1");
    set.add("other", "t3");
    CHECK(set.targets_of("s") == std::vector<std::string>{"t1", "t2"});
    CHECK(set.targets_of("missing").empty());
}

TEST_CASE("intersect and subtract are pairwise set operations") {
    MappingSet a;
    a.add("s1", "t1");
    a.add("s2", "t2");
    a.add("s3", "t3");
    MappingSet b;
    b.add("s2", "t2");
    b.add("s4", "t4");
    CHECK(a.intersect(b).size() == 1);
    CHECK(a.intersect(b).contains("s2", "t2"));
    CHECK(a.subtract(b).size() == 2);
    CHECK_FALSE(a.subtract(b).contains("s2", "t2"));
    // a = (a ∩ b) ∪ (a \ b)
    CHECK(a.intersect(b).size() + a.subtract(b).size() == a.size());
}

TEST_CASE("equality compares pairs and relation") {
    MappingSet a;
    a.add("s", "t", 1.0);
    MappingSet b;
    b.add("s", "t", 0.5);  // scores are not part of identity
    CHECK(a == b);
    MappingSet c(MappingRelation::subsumption);
    c.add("s", "t", 1.0);
    CHECK_FALSE(a == c);
}

TEST_CASE("format_score uses up to six decimals, trailing zeros trimmed") {
    CHECK(format_score(1.0) == "1.0");
    CHECK(format_score(0.5) == "0.5");
    CHECK(format_score(1.0 - 3.0 / 7.0) == "0.571429");
    CHECK(format_score(0.0) == "0.0");
    CHECK(format_score(0.25) == "0.25");
    CHECK(format_score(0.123456789) == "0.123457");
}

TEST_CASE("TSV round-trip preserves pairs and scores") {
    MappingSet set;
    set.add("http://a/1", "http://b/1", 1.0);
    set.add("http://a/2", "http://b/2", 0.5714285714285714);
    set.add("http://a/3", "http://b/3");  // missing score serializes as 1.0

    const auto path = temp_file("roundtrip.tsv");
    set.write_tsv(path);
    const MappingSet back = MappingSet::read_tsv(path);
    CHECK(back == set);
    CHECK(back.find("http://a/2", "http://b/2")->score == doctest::Approx(0.571429));
    CHECK(back.find("http://a/3", "http://b/3")->score == 1.0);

    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "SrcEntity\tTgtEntity\tScore");
    std::filesystem::remove(path);
}

TEST_CASE("read_tsv accepts CRLF and blank lines, keeps requested relation") {
    const auto path = temp_file("crlf.tsv");
    write_file(path, "SrcEntity\tTgtEntity\tScore\r\nhttp://a/1\thttp://b/1\t1.0\r\n\r\n");
    const MappingSet set = MappingSet::read_tsv(path, MappingRelation::subsumption);
    CHECK(set.size() == 1);
    CHECK(set.relation() == MappingRelation::subsumption);
    CHECK(set.items()[0].relation == MappingRelation::subsumption);
    std::filesystem::remove(path);
}

TEST_CASE("read_tsv rejects malformed input") {
    const auto path = temp_file("bad.tsv");

    SUBCASE("missing header") {
        write_file(path, "http://a/1\thttp://b/1\t1.0\n");
        CHECK_THROWS_AS(MappingSet::read_tsv(path), ParseError);
    }
    SUBCASE("too few columns") {
        write_file(path, "SrcEntity\tTgtEntity\tScore\nhttp://a/1\thttp://b/1\n");
        try {
            MappingSet::read_tsv(path);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("invalid score text") {
        write_file(path, "SrcEntity\tTgtEntity\tScore\nhttp://a/1\thttp://b/1\tabc\n");
        CHECK_THROWS_AS(MappingSet::read_tsv(path), ParseError);
    }
    SUBCASE("trailing junk after score") {
        write_file(path, "SrcEntity\tTgtEntity\tScore\nhttp://a/1\thttp://b/1\t1.0x\n");
        CHECK_THROWS_AS(MappingSet::read_tsv(path), ParseError);
    }
    SUBCASE("empty IRI field") {
        write_file(path, "SrcEntity\tTgtEntity\tScore\n\thttp://b/1\t1.0\n");
        CHECK_THROWS_AS(MappingSet::read_tsv(path), ParseError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(MappingSet::read_tsv(temp_file("does_not_exist.tsv")), IoError);
    }
    std::filesystem::remove(path);
}

TEST_CASE("empty score field parses as no score") {
    const auto path = temp_file("noscore.tsv");
    write_file(path, "SrcEntity\tTgtEntity\tScore\nhttp://a/1\thttp://b/1\t\n");
    const MappingSet set = MappingSet::read_tsv(path);
    REQUIRE(set.size() == 1);
    CHECK_FALSE(set.items()[0].score.has_value());
    std::filesystem::remove(path);
}
