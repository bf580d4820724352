#pragma once

#include <stdexcept>
#include <string>

namespace colexnet {

// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input that cannot be read at all (bad TSV row, bad JSON).
class parse_error : public error {
public:
    parse_error(const std::string& msg, long line = -1)
        : error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// Well-formed input that violates a data invariant.
class validation_error : public error {
public:
    using error::error;
};

// Lookup of an id that does not exist.
class not_found_error : public error {
public:
    using error::error;
};

// Caller violated a documented precondition.
class contract_error : public error {
public:
    using error::error;
};

// Cross-reference between data structures is dangling.
class integrity_error : public error {
public:
    using error::error;
};

// Statistical operation cannot produce a defined result.
class analysis_error : public error {
public:
    using error::error;
};

// Filesystem trouble.
class io_error : public error {
public:
    using error::error;
};

} // namespace colexnet
