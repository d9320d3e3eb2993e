#pragma once

#include <stdexcept>
#include <string>

namespace rgfstat {

/// Invalid argument outside the supported domain (n < 1, k > n, bad subset, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A letter sequence violating one of the two RGF conditions.
/// `position` is the 1-based index of the first offending letter.
struct NotAnRgfError : std::runtime_error {
    std::size_t position;
    NotAnRgfError(std::size_t pos, const std::string& what)
        : std::runtime_error(what), position(pos) {}
};

/// Malformed text input (word, partition or pattern-set grammar).
struct ParseError : std::runtime_error {
    std::string token;
    ParseError(std::string tok, const std::string& what)
        : std::runtime_error(what), token(std::move(tok)) {}
};

/// Query against a pattern set or formula id that has no tabulated answer.
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

/// Formula evaluated outside the regime its statement covers.
struct OutOfRegimeError : std::runtime_error {
    explicit OutOfRegimeError(const std::string& what) : std::runtime_error(what) {}
};

/// Signed 64-bit coefficient or counter arithmetic overflowed.
struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Degree or leading-coefficient query on the zero polynomial.
struct ZeroPolynomialError : std::runtime_error {
    explicit ZeroPolynomialError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rgfstat
