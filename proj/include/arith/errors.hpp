#pragma once

#include <stdexcept>
#include <string>

namespace arith {

// Malformed or precondition-violating input (CLI exit code 1).
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A proven identity or cross-check failed at runtime (CLI exit code 3).
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arith
