#pragma once

#include <stdexcept>
#include <string>

namespace gptlab {

/// Input that could not be parsed into a space or state document.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Well-formed input asking for something outside the supported surface.
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gptlab
