#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dmcv {

// Base for every recoverable, input-driven failure raised by the library.
// Precondition violations by callers are reported with std::invalid_argument.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

// A computation would exceed one of the explicit size guards.
class LimitError : public Error {
public:
    using Error::Error;
};

// A deadline passed while a filter was running.
class TimeoutError : public Error {
public:
    using Error::Error;
};

} // namespace dmcv
