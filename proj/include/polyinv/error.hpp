#ifndef POLYINV_ERROR_HPP
#define POLYINV_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyinv {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Malformed input: dimension mismatch, wrong arity, unknown identifiers. */
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/** Well-formed input outside the domain of an operation (empty polytope, negative exponent on a zeroed variable). */
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/** Data that violates a genericity assumption, or a numeric degeneracy that survived all retries. */
class GenericityError : public Error {
public:
    explicit GenericityError(const std::string& what) : Error(what) {}
};

/** Syntax error in the polynomial grammar; line and column are 1-based. */
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : InputError("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace polyinv

#endif
