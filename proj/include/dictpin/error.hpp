#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dictpin {

// Base for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed frequency-list or mapping-file content. line() is 1-based, 0 if unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A corpus or distribution ended up with nothing in it.
class EmptySupportError : public Error {
public:
    using Error::Error;
};

// Arguments outside an operation's domain (bad alpha, mismatched PIN lengths, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Invalid scenario settings; the CLI maps this to a usage error.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Wraps a failure with the pipeline stage that raised it.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& what)
        : Error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace dictpin
