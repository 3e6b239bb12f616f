// SPDX-License-Identifier: MIT
// Copyright (c) 2026 the mbqc-toolkit authors
#pragma once

#include <stdexcept>
#include <string>

namespace mbqc {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An operation was invoked on data that does not satisfy its stated
// precondition (e.g. a rewrite that requires standard form).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// A computation would exceed a hard resource cap (simulation width,
// path enumeration budget, ...).
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(what) {}
};

// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? ("line " + std::to_string(line) + ": " + what) : what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace mbqc
