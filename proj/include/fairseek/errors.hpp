#pragma once

#include <stdexcept>
#include <string>

namespace fairseek {

/// Base class for all harness errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input (bad row, bad JSON, bad config syntax). Carries a
/// line number when one is known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, long line = -1)
        : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// Input parsed but violates a contract (duplicate id, empty field).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Caller violated an operation precondition (empty keyword string, limit 0).
class ContractError : public Error {
public:
    using Error::Error;
};

/// Illegal state transition (resume on a non-blocked ticket, merge with one
/// annotation).
class StateError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// A metric has no defined value for the given inputs (zero denominator).
class UndefinedMetricError : public Error {
public:
    using Error::Error;
};

/// Too few observations to run a statistic.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Search backend failed in a way distinct from "no results".
class BackendError : public Error {
public:
    using Error::Error;
};

}  // namespace fairseek
