#pragma once

#include <stdexcept>
#include <string>

namespace emh {

// malformed input text (edge lists, generator specs, chain expressions)
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// structurally valid input that violates an operation's precondition
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// a configured resource cap was exceeded (matrix nnz, oracle instance size)
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// filesystem trouble (unreadable input, unwritable output)
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace emh
