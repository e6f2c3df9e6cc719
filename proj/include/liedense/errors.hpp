#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liedense {

// Bad user input: wrong flag combinations, malformed expressions,
// violated preconditions.  CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation was refused because it would exceed a configured
// resource guard (column counts, commutator counts, bit budgets).
// CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error in the expression grammar, with the byte offset of the
// offending position.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t offset, const std::string& msg)
        : ValidationError("syntax error at byte " + std::to_string(offset) + ": " + msg),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace liedense
