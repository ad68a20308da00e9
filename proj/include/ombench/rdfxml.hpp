#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ombench/ontology.hpp"

namespace ombench {

/// Warning counters from one RDF/XML import. Anything outside the recognized
/// subset is counted and skipped, never fatal.
struct RdfXmlReport {
    std::size_t classes_declared = 0;
    std::size_t duplicate_class_declarations = 0;
    std::size_t dangling_edges_dropped = 0;
    std::size_t skipped_constructs = 0;
    std::size_t empty_literals_dropped = 0;

    nlohmann::ordered_json to_json() const;
};

struct RdfXmlResult {
    OntologySnapshot snapshot;
    RdfXmlReport report;
};

/**
 * Parses the RDF/XML subset used by named-class ontology exports:
 *
 *  - owl:Class elements (or rdf:Description typed owl:Class) carrying
 *    rdf:about / rdf:ID declare classes;
 *  - rdfs:subClassOf with an rdf:resource attribute or a nested named-class
 *    reference asserts a parent edge; anonymous restriction blocks are
 *    skipped silently;
 *  - literal-valued child elements become labels keyed by property IRI;
 *  - owl:deprecated with literal "true" sets the deprecation flag;
 *  - owl:Ontology rdf:about supplies the ontology IRI.
 *
 * Relative IRIs resolve against xml:base (falling back to base_iri). Throws
 * ParseError with line/column on malformed XML.
 */
RdfXmlResult import_rdfxml(std::string_view document, std::string_view base_iri = {});

RdfXmlResult read_rdfxml(const std::filesystem::path& path, std::string_view base_iri = {});

}  // namespace ombench
