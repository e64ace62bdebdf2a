#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bisimod {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed formula text. Carries the byte offset of the offending token
/// and the set of tokens the parser would have accepted there.
struct ParseError : Error {
    ParseError(std::string msg, std::size_t offset, std::vector<std::string> expected);

    std::size_t offset;
    std::vector<std::string> expected;
};

/// Syntactically broken input document (JSON or proof text).
struct FormatError : Error {
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

/// Well-formed document that violates a structural invariant
/// (unknown world, empty world set, duplicate entry, ...).
/// `path` points at the offending entry, e.g. "left.rel[3]".
struct ValidationError : Error {
    ValidationError(const std::string& msg, std::string path_);

    std::string path;
};

struct UnknownFixture : Error {
    explicit UnknownFixture(const std::string& name);
};

struct UnknownWorld : Error {
    explicit UnknownWorld(const std::string& world);
};

/// An enumeration or evaluation would exceed its configured bound.
struct BoundExceeded : Error {
    using Error::Error;
};

/// Argument to a generator must be a box-only formula (no [b]).
struct NotLSquare : Error {
    using Error::Error;
};

/// Tautology check aborted: propositional skeleton has too many variables.
struct SkeletonTooLarge : Error {
    explicit SkeletonTooLarge(std::size_t vars, std::size_t cap);

    std::size_t vars;
    std::size_t cap;
};

} // namespace bisimod
