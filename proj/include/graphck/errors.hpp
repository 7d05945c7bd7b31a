#pragma once

#include <stdexcept>
#include <string>

namespace graphck {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad matrix shape, duplicate names, bad JSON payloads.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error("validation error: " + what) {}
};

class NotFound : public Error {
public:
    explicit NotFound(const std::string& what) : Error("not found: " + what) {}
};

// An operation was called outside the domain where it is defined.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

// A graph move was requested whose preconditions do not hold.
class MoveError : public Error {
public:
    explicit MoveError(const std::string& what) : Error("move error: " + what) {}
};

// A post-condition check failed; indicates a bug rather than bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error("internal error: " + what) {}
};

class CannotRealize : public Error {
public:
    explicit CannotRealize(const std::string& what) : Error("cannot realize: " + what) {}
};

} // namespace graphck
