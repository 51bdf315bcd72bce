#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hboot {

/// Precondition violated by a caller-supplied argument.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed external input (graph6, JSON). Carries the byte offset of the
/// first offending character when one is known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")")
        , offset_(offset)
    {
    }

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace hboot
