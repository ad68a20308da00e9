#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ombench {

/// Base class for all toolkit errors.
class OmError : public std::runtime_error {
public:
    explicit OmError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A class IRI was queried that does not exist in the snapshot.
class UnknownClassError : public OmError {
public:
    explicit UnknownClassError(const std::string& iri)
        : OmError("unknown class: " + iri), iri_(iri) {}
    const std::string& iri() const { return iri_; }

private:
    std::string iri_;
};

/// Malformed input document; carries the 1-based line/column of the failure.
class ParseError : public OmError {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : OmError(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line_(line),
          col_(col) {}
    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    std::size_t line_;
    std::size_t col_;
};

/// Structural violation in a JSON document; names the offending path.
class SchemaError : public OmError {
public:
    SchemaError(const std::string& path, const std::string& msg)
        : OmError("schema error at " + path + ": " + msg), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// A sampling plan asks for more negatives than the class universe can supply.
class InfeasiblePlanError : public OmError {
public:
    explicit InfeasiblePlanError(const std::string& msg) : OmError(msg) {}
};

/// Filesystem-level failure (open/read/write).
class IoError : public OmError {
public:
    explicit IoError(const std::string& msg) : OmError(msg) {}
};

}  // namespace ombench
