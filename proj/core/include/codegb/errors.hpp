#pragma once

#include <stdexcept>

namespace codegb {

/// Malformed text input (matrix, graph, word or bit-string grammar).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computation would exceed the documented resource envelope.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace codegb
