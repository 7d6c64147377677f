#pragma once

#include <stdexcept>
#include <string>

namespace synchro {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text or schema violations in user-supplied input.
struct ParseError : Error {
    using Error::Error;
};

// Operation requires a transitive group; flagged distinctly so callers can
// report "not applicable" rather than "malformed".
struct IntransitiveError : Error {
    using Error::Error;
};

// A configured search budget ran out before the question was decided.
struct BudgetExceeded : Error {
    using Error::Error;
};

} // namespace synchro
