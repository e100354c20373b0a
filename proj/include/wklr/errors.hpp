#pragma once

#include <stdexcept>
#include <string>

namespace wklr {

// Two addable/removable boxes (or loading points, or interpolated strands)
// landed on the same horizontal position; the weighting is not generic
// enough for the requested operation.
struct DegenerateWeighting : std::runtime_error {
    explicit DegenerateWeighting(const std::string& what)
        : std::runtime_error("degenerate weighting: " + what) {}
};

// Exact division in Z[q,q^-1] left a remainder.  Always indicates a
// convention bug upstream, never a data error.
struct DivisionFailure : std::runtime_error {
    explicit DivisionFailure(const std::string& what)
        : std::runtime_error("division failure: " + what) {}
};

// Canonical-basis peeling met a subtraction coefficient with a negative
// integer coefficient, or a residual diagonal != 1.
struct PeelFailure : std::runtime_error {
    explicit PeelFailure(const std::string& what)
        : std::runtime_error("peel failure: " + what) {}
};

// The triangular solve for a basis mutation was inconsistent.
struct MutationFailure : std::runtime_error {
    explicit MutationFailure(const std::string& what)
        : std::runtime_error("mutation failure: " + what) {}
};

// Malformed input data (bad JSON field, invalid partition, ...).
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what)
        : std::runtime_error("invalid input: " + what) {}
};

}  // namespace wklr
