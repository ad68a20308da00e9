#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "ombench/rdfxml.hpp"

using namespace ombench;

namespace {

const char* kPrologue = R"(<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xmlns:owl="http://www.w3.org/2002/07/owl#"
         xml:base="http://example.org/onto">
)";

std::string wrap(const std::string& body) {
    return std::string(kPrologue) + body + "</rdf:RDF>\n";
}

}  // namespace

TEST_CASE("classes, labels and subClassOf resource edges") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <owl:Ontology rdf:about="http://example.org/onto"/>
  <owl:Class rdf:about="#A">
    <rdfs:label>alpha class</rdfs:label>
    <rdfs:subClassOf rdf:resource="#B"/>
  </owl:Class>
  <owl:Class rdf:about="#B"/>
)"));
    CHECK(result.snapshot.ontology_iri() == "http://example.org/onto");
    CHECK(result.report.classes_declared == 2);
    CHECK(result.snapshot.size() == 2);
    const ClassRecord& a = result.snapshot.record("http://example.org/onto#A");
    CHECK(a.labels.at("http://www.w3.org/2000/01/rdf-schema#label") ==
          std::vector<std::string>{"alpha class"});
    CHECK(result.snapshot.asserted_parents("http://example.org/onto#A") ==
          std::set<std::string>{"http://example.org/onto#B"});
}

TEST_CASE("rdf:ID declarations resolve against the base IRI") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <owl:Class rdf:ID="Local"/>
)"));
    CHECK(result.snapshot.contains("http://example.org/onto#Local"));
}

TEST_CASE("explicit base_iri argument is used when xml:base is absent") {
    const std::string doc = R"(<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:owl="http://www.w3.org/2002/07/owl#">
  <owl:Class rdf:about="#X"/>
</rdf:RDF>)";
    const RdfXmlResult result = import_rdfxml(doc, "http://fallback.example");
    CHECK(result.snapshot.contains("http://fallback.example#X"));
}

TEST_CASE("rdf:Description typed owl:Class declares a class") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <rdf:Description rdf:about="#D">
    <rdf:type rdf:resource="http://www.w3.org/2002/07/owl#Class"/>
    <rdfs:label>described</rdfs:label>
  </rdf:Description>
)"));
    CHECK(result.report.classes_declared == 1);
    CHECK(result.snapshot.contains("http://example.org/onto#D"));
}

TEST_CASE("untyped rdf:Description is skipped, not fatal") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <rdf:Description rdf:about="#notaclass">
    <rdfs:label>nope</rdfs:label>
  </rdf:Description>
  <owl:Class rdf:about="#A"/>
)"));
    CHECK(result.report.classes_declared == 1);
    CHECK(result.report.skipped_constructs == 1);
    CHECK_FALSE(result.snapshot.contains("http://example.org/onto#notaclass"));
}

TEST_CASE("nested named class inside subClassOf asserts the edge") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <owl:Class rdf:about="#A">
    <rdfs:subClassOf>
      <owl:Class rdf:about="#B"/>
    </rdfs:subClassOf>
  </owl:Class>
  <owl:Class rdf:about="#B"/>
)"));
    CHECK(result.snapshot.asserted_parents("http://example.org/onto#A") ==
          std::set<std::string>{"http://example.org/onto#B"});
}

TEST_CASE("anonymous restriction under subClassOf is skipped") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <owl:Class rdf:about="#A">
    <rdfs:subClassOf rdf:resource="#B"/>
    <rdfs:subClassOf>
      <owl:Restriction>
        <owl:onProperty rdf:resource="#p"/>
        <owl:someValuesFrom rdf:resource="#B"/>
      </owl:Restriction>
    </rdfs:subClassOf>
  </owl:Class>
  <owl:Class rdf:about="#B"/>
)"));
    CHECK(result.report.skipped_constructs == 1);
    CHECK(result.snapshot.asserted_parents("http://example.org/onto#A") ==
          std::set<std::string>{"http://example.org/onto#B"});
}

TEST_CASE("resource-valued annotation properties are outside the subset") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <owl:Class rdf:about="#A">
    <rdfs:seeAlso rdf:resource="http://elsewhere.example/doc"/>
    <rdfs:label>kept</rdfs:label>
  </owl:Class>
)"));
    CHECK(result.report.skipped_constructs == 1);
    const ClassRecord& a = result.snapshot.record("http://example.org/onto#A");
    CHECK(a.labels.size() == 1);
}

TEST_CASE("empty literals are dropped and counted") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <owl:Class rdf:about="#A">
    <rdfs:label></rdfs:label>
    <rdfs:label>   </rdfs:label>
    <rdfs:comment>real text</rdfs:comment>
  </owl:Class>
)"));
    CHECK(result.report.empty_literals_dropped == 2);
    const ClassRecord& a = result.snapshot.record("http://example.org/onto#A");
    CHECK(a.labels.count("http://www.w3.org/2000/01/rdf-schema#label") == 0);
    CHECK(a.labels.at("http://www.w3.org/2000/01/rdf-schema#comment") ==
          std::vector<std::string>{"real text"});
}

TEST_CASE("CDATA sections and entities decode into literal text") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <owl:Class rdf:about="#A">
    <rdfs:label><![CDATA[raw <tag> text]]></rdfs:label>
    <rdfs:comment>salt &amp; pepper &lt;mix&gt;</rdfs:comment>
  </owl:Class>
)"));
    const ClassRecord& a = result.snapshot.record("http://example.org/onto#A");
    CHECK(a.labels.at("http://www.w3.org/2000/01/rdf-schema#label") ==
          std::vector<std::string>{"raw <tag> text"});
    CHECK(a.labels.at("http://www.w3.org/2000/01/rdf-schema#comment") ==
          std::vector<std::string>{"salt & pepper <mix>"});
}

TEST_CASE("comments and processing instructions are ignored") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <!-- a comment -->
  <owl:Class rdf:about="#A">
    <!-- nested comment -->
    <rdfs:label>ok</rdfs:label>
  </owl:Class>
)"));
    CHECK(result.report.classes_declared == 1);
    CHECK(result.report.skipped_constructs == 0);
}

TEST_CASE("owl:deprecated true sets the flag") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <owl:Class rdf:about="#Old">
    <owl:deprecated>true</owl:deprecated>
  </owl:Class>
  <owl:Class rdf:about="#New">
    <owl:deprecated>false</owl:deprecated>
  </owl:Class>
)"));
    CHECK(result.snapshot.record("http://example.org/onto#Old").deprecated);
    CHECK_FALSE(result.snapshot.record("http://example.org/onto#New").deprecated);
}

TEST_CASE("dangling parent references are dropped with a count") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <owl:Class rdf:about="#A">
    <rdfs:subClassOf rdf:resource="#never-declared"/>
  </owl:Class>
)"));
    CHECK(result.report.dangling_edges_dropped == 1);
    CHECK(result.snapshot.asserted_parents("http://example.org/onto#A").empty());
}

TEST_CASE("duplicate declarations merge labels and parents") {
    const RdfXmlResult result = import_rdfxml(wrap(R"(
  <owl:Class rdf:about="#A">
    <rdfs:label>one</rdfs:label>
  </owl:Class>
  <owl:Class rdf:about="#A">
    <rdfs:label>two</rdfs:label>
    <rdfs:subClassOf rdf:resource="#B"/>
  </owl:Class>
  <owl:Class rdf:about="#B"/>
)"));
    CHECK(result.report.classes_declared == 2);
    CHECK(result.report.duplicate_class_declarations == 1);
    const ClassRecord& a = result.snapshot.record("http://example.org/onto#A");
    CHECK(a.labels.at("http://www.w3.org/2000/01/rdf-schema#label") ==
          std::vector<std::string>{"one", "two"});
    CHECK(a.parents == std::set<std::string>{"http://example.org/onto#B"});
}

TEST_CASE("malformed XML raises ParseError with a position") {
    const std::string doc = wrap(R"(
  <owl:Class rdf:about="#A">
    <rdfs:label>unclosed
  </owl:Class>
)");
    CHECK_THROWS_AS(import_rdfxml(doc), ParseError);
    try {
        import_rdfxml(doc);
    } catch (const ParseError& e) {
        CHECK(e.line() >= 1);
        CHECK(e.col() >= 1);
    }
}

TEST_CASE("truncated document raises ParseError") {
    const std::string doc = std::string(kPrologue) + "<owl:Class rdf:about=\"#A\">";
    CHECK_THROWS_AS(import_rdfxml(doc), ParseError);
}

TEST_CASE("report serializes with fixed key order") {
    RdfXmlReport report;
    report.classes_declared = 5;
    report.skipped_constructs = 2;
    const auto doc = report.to_json();
    const std::vector<std::string> keys = {"classes_declared", "duplicate_class_declarations",
                                           "dangling_edges_dropped", "skipped_constructs",
                                           "empty_literals_dropped"};
    std::size_t i = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it, ++i) {
        REQUIRE(i < keys.size());
        CHECK(it.key() == keys[i]);
    }
    CHECK(doc["classes_declared"] == 5);
}
