#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyctan {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structural misuse: mismatched rings, wrong lengths, invalid arguments.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Text input rejected by a parser; carries the byte offset of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A denominator lies in the prime it was supposed to avoid.
class LocalizationError : public Error {
public:
    using Error::Error;
};

/// Input falls outside the supported cases; carries the computed
/// decomposition so the caller can see why.
class UnsupportedCaseError : public Error {
public:
    explicit UnsupportedCaseError(const std::string& what, std::string decomposition = {})
        : Error(what), decomposition_(std::move(decomposition)) {}

    const std::string& decomposition() const { return decomposition_; }

private:
    std::string decomposition_;
};

/// A configured resource cap (e.g. KOSZUL_GB_LIMIT) was exceeded.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

}  // namespace cyctan
