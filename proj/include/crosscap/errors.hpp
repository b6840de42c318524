#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crosscap {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected construction of a curve, generator, relation instance, or step.
struct validation_error : error {
    using error::error;
};

// Malformed curve or word text.  position is a byte offset into the input.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

} // namespace crosscap
