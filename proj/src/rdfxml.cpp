#include "ombench/rdfxml.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <vector>

#include "ombench/errors.hpp"

namespace ombench {

namespace {

constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kXmlNs = "http://www.w3.org/XML/1998/namespace";

// ---------------------------------------------------------------------------
// Minimal XML tree
// ---------------------------------------------------------------------------

struct XmlAttr {
    std::string qname;
    std::string value;
};

struct XmlElement {
    std::string qname;
    std::vector<XmlAttr> attrs;
    std::vector<std::unique_ptr<XmlElement>> children;
    std::string text;  // concatenated direct character data
    std::size_t line = 0;
    std::size_t col = 0;
};

/// Hand-rolled non-validating XML parser. Tracks line/column for error
/// reporting; handles comments, CDATA, processing instructions, DOCTYPE,
/// and the standard plus numeric character entities.
class XmlParser {
public:
    explicit XmlParser(std::string_view input) : input_(input) {}

    std::unique_ptr<XmlElement> parse_document() {
        skip_misc();
        if (eof() || peek() != '<') {
            fail("expected root element");
        }
        auto root = parse_element();
        skip_misc();
        if (!eof()) {
            fail("trailing content after root element");
        }
        return root;
    }

private:
    std::string_view input_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("malformed XML: " + msg, line_, col_);
    }

    bool eof() const { return pos_ >= input_.size(); }
    char peek() const { return input_[pos_]; }

    char get() {
        const char c = input_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    bool starts_with(std::string_view s) const {
        return input_.substr(pos_, s.size()) == s;
    }

    void expect(std::string_view s) {
        if (!starts_with(s)) {
            fail("expected '" + std::string(s) + "'");
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
            get();
        }
    }

    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
    }

    static bool is_name_char(char c) {
        return !is_space(c) && c != '<' && c != '>' && c != '/' && c != '=' && c != '\'' &&
               c != '"' && c != '?' && c != '!';
    }

    void skip_space() {
        while (!eof() && is_space(peek())) {
            get();
        }
    }

    // Whitespace, comments, PIs and DOCTYPE between markup.
    void skip_misc() {
        for (;;) {
            skip_space();
            if (starts_with("<?")) {
                skip_until("?>");
            } else if (starts_with("<!--")) {
                skip_comment();
            } else if (starts_with("<!DOCTYPE")) {
                skip_doctype();
            } else {
                return;
            }
        }
    }

    void skip_until(std::string_view terminator) {
        while (!eof()) {
            if (starts_with(terminator)) {
                expect(terminator);
                return;
            }
            get();
        }
        fail("unterminated '" + std::string(terminator) + "' construct");
    }

    void skip_comment() {
        expect("<!--");
        skip_until("-->");
    }

    void skip_doctype() {
        expect("<!DOCTYPE");
        int bracket_depth = 0;
        while (!eof()) {
            const char c = get();
            if (c == '[') {
                ++bracket_depth;
            } else if (c == ']') {
                --bracket_depth;
            } else if (c == '>' && bracket_depth <= 0) {
                return;
            }
        }
        fail("unterminated DOCTYPE");
    }

    std::string parse_name() {
        if (eof() || !is_name_char(peek())) {
            fail("expected a name");
        }
        std::string name;
        while (!eof() && is_name_char(peek())) {
            name.push_back(get());
        }
        return name;
    }

    void append_codepoint(std::string& out, unsigned long cp) {
        if (cp <= 0x7f) {
            out.push_back(static_cast<char>(cp));
        } else if (cp <= 0x7ff) {
            out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
        } else if (cp <= 0xffff) {
            out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
        } else if (cp <= 0x10ffff) {
            out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
        } else {
            fail("character reference out of range");
        }
    }

    void parse_entity(std::string& out) {
        expect("&");
        std::string entity;
        while (!eof() && peek() != ';') {
            entity.push_back(get());
            if (entity.size() > 10) {
                fail("unterminated entity reference");
            }
        }
        if (eof()) {
            fail("unterminated entity reference");
        }
        get();  // ';'
        if (entity == "amp") {
            out.push_back('&');
        } else if (entity == "lt") {
            out.push_back('<');
        } else if (entity == "gt") {
            out.push_back('>');
        } else if (entity == "quot") {
            out.push_back('"');
        } else if (entity == "apos") {
            out.push_back('\'');
        } else if (entity.size() > 1 && entity[0] == '#') {
            const bool hex = entity.size() > 2 && (entity[1] == 'x' || entity[1] == 'X');
            const std::string digits = entity.substr(hex ? 2 : 1);
            if (digits.empty()) {
                fail("empty character reference");
            }
            unsigned long cp = 0;
            try {
                std::size_t consumed = 0;
                cp = std::stoul(digits, &consumed, hex ? 16 : 10);
                if (consumed != digits.size()) {
                    fail("invalid character reference '&" + entity + ";'");
                }
            } catch (const std::exception&) {
                fail("invalid character reference '&" + entity + ";'");
            }
            append_codepoint(out, cp);
        } else {
            fail("unknown entity '&" + entity + ";'");
        }
    }

    std::string parse_attr_value() {
        if (eof() || (peek() != '"' && peek() != '\'')) {
            fail("expected quoted attribute value");
        }
        const char quote = get();
        std::string value;
        while (!eof() && peek() != quote) {
            if (peek() == '&') {
                parse_entity(value);
            } else if (peek() == '<') {
                fail("'<' in attribute value");
            } else {
                value.push_back(get());
            }
        }
        if (eof()) {
            fail("unterminated attribute value");
        }
        get();  // closing quote
        return value;
    }

    std::unique_ptr<XmlElement> parse_element() {
        auto elem = std::make_unique<XmlElement>();
        elem->line = line_;
        elem->col = col_;
        expect("<");
        elem->qname = parse_name();
        for (;;) {
            skip_space();
            if (eof()) {
                fail("unterminated start tag for <" + elem->qname + ">");
            }
            if (starts_with("/>")) {
                expect("/>");
                return elem;
            }
            if (peek() == '>') {
                get();
                break;
            }
            XmlAttr attr;
            attr.qname = parse_name();
            skip_space();
            expect("=");
            skip_space();
            attr.value = parse_attr_value();
            elem->attrs.push_back(std::move(attr));
        }
        // Content: text, child elements, comments, CDATA, PIs.
        for (;;) {
            if (eof()) {
                fail("missing end tag for <" + elem->qname + ">");
            }
            if (peek() == '<') {
                if (starts_with("</")) {
                    expect("</");
                    const std::string closing = parse_name();
                    if (closing != elem->qname) {
                        fail("mismatched end tag </" + closing + ">, expected </" + elem->qname +
                             ">");
                    }
                    skip_space();
                    expect(">");
                    return elem;
                }
                if (starts_with("<!--")) {
                    skip_comment();
                } else if (starts_with("<![CDATA[")) {
                    expect("<![CDATA[");
                    while (!eof() && !starts_with("]]>")) {
                        elem->text.push_back(get());
                    }
                    expect("]]>");
                } else if (starts_with("<?")) {
                    skip_until("?>");
                } else {
                    elem->children.push_back(parse_element());
                }
            } else if (peek() == '&') {
                parse_entity(elem->text);
            } else {
                elem->text.push_back(get());
            }
        }
    }
};

// ---------------------------------------------------------------------------
// IRI resolution
// ---------------------------------------------------------------------------

bool has_scheme(std::string_view iri) {
    if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) {
        return false;
    }
    for (std::size_t i = 1; i < iri.size(); ++i) {
        const char c = iri[i];
        if (c == ':') {
            return true;
        }
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
            return false;
        }
    }
    return false;
}

std::string strip_fragment(std::string_view iri) {
    const auto hash = iri.find('#');
    return std::string(hash == std::string_view::npos ? iri : iri.substr(0, hash));
}

/// Simplified RFC 3986 resolution covering the forms ontology exports use:
/// absolute IRIs, fragment-only references, and path-relative references.
std::string resolve_iri(std::string_view base, std::string_view ref) {
    if (ref.empty()) {
        return strip_fragment(base);
    }
    if (has_scheme(ref)) {
        return std::string(ref);
    }
    if (ref[0] == '#') {
        return strip_fragment(base) + std::string(ref);
    }
    const std::string stripped = strip_fragment(base);
    const auto scheme_end = stripped.find("://");
    const std::size_t path_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
    const auto last_slash = stripped.rfind('/');
    if (last_slash == std::string::npos || last_slash < path_start) {
        return stripped + "/" + std::string(ref);
    }
    return stripped.substr(0, last_slash + 1) + std::string(ref);
}

// ---------------------------------------------------------------------------
// RDF interpretation
// ---------------------------------------------------------------------------

struct QualifiedName {
    std::string ns;
    std::string local;

    bool is(std::string_view want_ns, std::string_view want_local) const {
        return ns == want_ns && local == want_local;
    }

    std::string iri() const { return ns + local; }
};

struct Scope {
    std::map<std::string, std::string> ns_by_prefix;  // "" is the default namespace
    std::string default_ns;
    std::string base;
};

std::string trimmed(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return s.substr(begin, end - begin);
}

class RdfWalker {
public:
    explicit RdfWalker(std::string_view fallback_base) {
        root_scope_.base = std::string(fallback_base);
        root_scope_.ns_by_prefix["xml"] = std::string(kXmlNs);
    }

    RdfXmlResult run(const XmlElement& root) {
        const Scope scope = child_scope(root_scope_, root);
        const QualifiedName name = resolve_qname(root.qname, scope, root);
        if (name.is(kRdfNs, "RDF")) {
            for (const auto& child : root.children) {
                process_subject(*child, scope);
            }
        } else {
            process_subject(root, scope);
        }
        BuildStats stats;
        std::vector<ClassRecord> records;
        records.reserve(classes_.size());
        for (auto& [iri, rec] : classes_) {
            records.push_back(std::move(rec));
        }
        OntologySnapshot snapshot =
            OntologySnapshot::build(ontology_iri_, std::move(records), std::string(kOwlThing),
                                    &stats);
        report_.dangling_edges_dropped += stats.dangling_parents_dropped;
        return RdfXmlResult{std::move(snapshot), report_};
    }

private:
    Scope root_scope_;
    std::map<std::string, ClassRecord> classes_;
    std::string ontology_iri_;
    RdfXmlReport report_;

    static Scope child_scope(const Scope& parent, const XmlElement& elem) {
        Scope scope = parent;
        for (const auto& attr : elem.attrs) {
            if (attr.qname == "xmlns") {
                scope.default_ns = attr.value;
            } else if (attr.qname.rfind("xmlns:", 0) == 0) {
                scope.ns_by_prefix[attr.qname.substr(6)] = attr.value;
            }
        }
        // xml:base may itself be relative to the surrounding base.
        for (const auto& attr : elem.attrs) {
            if (attr.qname == "xml:base") {
                scope.base = resolve_iri(parent.base, attr.value);
            }
        }
        return scope;
    }

    QualifiedName resolve_qname(const std::string& qname, const Scope& scope,
                                const XmlElement& elem) const {
        const auto colon = qname.find(':');
        if (colon == std::string::npos) {
            return QualifiedName{scope.default_ns, qname};
        }
        const std::string prefix = qname.substr(0, colon);
        auto it = scope.ns_by_prefix.find(prefix);
        if (it == scope.ns_by_prefix.end()) {
            throw ParseError("malformed XML: undeclared namespace prefix '" + prefix + "'",
                             elem.line, elem.col);
        }
        return QualifiedName{it->second, qname.substr(colon + 1)};
    }

    /// rdf:about / rdf:ID of an element, resolved; empty when neither is set.
    std::string subject_iri(const XmlElement& elem, const Scope& scope) const {
        for (const auto& attr : elem.attrs) {
            const auto colon = attr.qname.find(':');
            if (colon == std::string::npos) {
                continue;
            }
            const std::string prefix = attr.qname.substr(0, colon);
            auto it = scope.ns_by_prefix.find(prefix);
            if (it == scope.ns_by_prefix.end() || it->second != kRdfNs) {
                continue;
            }
            const std::string local = attr.qname.substr(colon + 1);
            if (local == "about") {
                return resolve_iri(scope.base, attr.value);
            }
            if (local == "ID") {
                return strip_fragment(scope.base) + "#" + attr.value;
            }
        }
        return {};
    }

    std::string resource_attr(const XmlElement& elem, const Scope& scope) const {
        for (const auto& attr : elem.attrs) {
            const auto colon = attr.qname.find(':');
            if (colon == std::string::npos) {
                continue;
            }
            auto it = scope.ns_by_prefix.find(attr.qname.substr(0, colon));
            if (it != scope.ns_by_prefix.end() && it->second == kRdfNs &&
                attr.qname.substr(colon + 1) == "resource") {
                return resolve_iri(scope.base, attr.value);
            }
        }
        return {};
    }

    bool is_class_subject(const XmlElement& elem, const Scope& scope,
                          const QualifiedName& name) const {
        if (name.is(kOwlNs, "Class")) {
            return true;
        }
        if (!name.is(kRdfNs, "Description")) {
            return false;
        }
        for (const auto& child : elem.children) {
            const Scope cs = child_scope(scope, *child);
            const QualifiedName cn = resolve_qname(child->qname, cs, *child);
            if (cn.is(kRdfNs, "type") && resource_attr(*child, cs) == std::string(kOwlNs) + "Class") {
                return true;
            }
        }
        return false;
    }

    void process_subject(const XmlElement& elem, const Scope& parent_scope) {
        const Scope scope = child_scope(parent_scope, elem);
        const QualifiedName name = resolve_qname(elem.qname, scope, elem);
        const std::string iri = subject_iri(elem, scope);
        if (name.is(kOwlNs, "Ontology")) {
            if (ontology_iri_.empty()) {
                ontology_iri_ = iri;
            }
            return;
        }
        if (iri.empty() || !is_class_subject(elem, scope, name)) {
            ++report_.skipped_constructs;
            return;
        }
        auto [it, inserted] = classes_.try_emplace(iri);
        if (inserted) {
            it->second.iri = iri;
            ++report_.classes_declared;
        } else {
            ++report_.duplicate_class_declarations;
        }
        process_properties(elem, scope, it->second);
    }

    void process_properties(const XmlElement& elem, const Scope& scope, ClassRecord& rec) {
        for (const auto& child : elem.children) {
            const Scope cs = child_scope(scope, *child);
            const QualifiedName cn = resolve_qname(child->qname, cs, *child);
            if (cn.is(kRdfNs, "type")) {
                continue;
            }
            if (cn.is(kRdfsNs, "subClassOf")) {
                process_subclass_of(*child, cs, rec);
                continue;
            }
            if (cn.is(kOwlNs, "deprecated")) {
                if (trimmed(child->text) == "true") {
                    rec.deprecated = true;
                }
                continue;
            }
            if (!resource_attr(*child, cs).empty() || !child->children.empty()) {
                // Resource-valued or structured property: outside the subset.
                ++report_.skipped_constructs;
                continue;
            }
            const std::string literal = trimmed(child->text);
            if (literal.empty()) {
                ++report_.empty_literals_dropped;
                continue;
            }
            rec.labels[cn.iri()].push_back(literal);
        }
    }

    void process_subclass_of(const XmlElement& elem, const Scope& scope, ClassRecord& rec) {
        const std::string resource = resource_attr(elem, scope);
        if (!resource.empty()) {
            rec.parents.insert(resource);
            return;
        }
        // A nested named-class reference also asserts the edge; anonymous
        // restriction blocks and other expressions are skipped.
        for (const auto& child : elem.children) {
            const Scope cs = child_scope(scope, *child);
            const QualifiedName cn = resolve_qname(child->qname, cs, *child);
            if (cn.is(kOwlNs, "Class") || cn.is(kRdfNs, "Description")) {
                const std::string target = subject_iri(*child, cs);
                if (!target.empty()) {
                    rec.parents.insert(target);
                    continue;
                }
            }
            ++report_.skipped_constructs;
        }
    }
};

}  // namespace

nlohmann::ordered_json RdfXmlReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["classes_declared"] = classes_declared;
    doc["duplicate_class_declarations"] = duplicate_class_declarations;
    doc["dangling_edges_dropped"] = dangling_edges_dropped;
    doc["skipped_constructs"] = skipped_constructs;
    doc["empty_literals_dropped"] = empty_literals_dropped;
    return doc;
}

RdfXmlResult import_rdfxml(std::string_view document, std::string_view base_iri) {
    XmlParser parser(document);
    const std::unique_ptr<XmlElement> root = parser.parse_document();
    RdfWalker walker(base_iri);
    return walker.run(*root);
}

RdfXmlResult read_rdfxml(const std::filesystem::path& path, std::string_view base_iri) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open ontology document: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    return import_rdfxml(bytes, base_iri);
}

}  // namespace ombench
