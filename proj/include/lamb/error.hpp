#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lamb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed term text. `pos` is the byte offset of the offending character.
struct ParseError : Error {
    ParseError(std::string msg, std::size_t pos)
        : Error(std::move(msg) + " (at offset " + std::to_string(pos) + ")"), pos(pos) {}
    std::size_t pos;
};

// A capitalized name that is neither bound nor a prelude constant.
struct UnknownNameError : ParseError {
    UnknownNameError(const std::string& name, std::size_t pos)
        : ParseError("unknown name '" + name + "'", pos), name(name) {}
    std::string name;
};

struct NonClosedTermError : Error {
    using Error::Error;
};

// Web file rejected at load time. `line` is 1-based.
struct WebFormatError : Error {
    WebFormatError(std::string msg, int line)
        : Error("line " + std::to_string(line) + ": " + std::move(msg)), line(line) {}
    int line;
};

// The partial coding is not injective (or codes the same pair twice).
struct InjectivityViolation : Error {
    using Error::Error;
};

} // namespace lamb
