#pragma once

#include <stdexcept>
#include <string>

namespace cartan {

struct GradeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PolyParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace cartan
