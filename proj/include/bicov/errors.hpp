#pragma once

#include <stdexcept>
#include <string>

namespace bicov {

/// Malformed input text (Cayley tables, cycle notation, irrep JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed to hold at the requested tolerance.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Required data (e.g. irreducible representations) is not available.
struct MissingDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bicov
