#pragma once

#include <stdexcept>
#include <string>

namespace ggp {

/// Input failed a structural precondition (parity, range, schema, ...).
/// CLI maps these to exit code 2.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Computation is ill-posed for the given values (vanishing denominator,
/// non-ordinary data, ...). CLI maps these to exit code 3.
struct arithmetic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parity_violation : validation_error {
    using validation_error::validation_error;
};
struct range_violation : validation_error {
    using validation_error::validation_error;
};
struct determinant_mismatch : validation_error {
    using validation_error::validation_error;
};
struct central_character_violation : validation_error {
    using validation_error::validation_error;
};
struct not_adjacent : validation_error {
    using validation_error::validation_error;
};
struct wrong_region : validation_error {
    using validation_error::validation_error;
};
struct unsupported : validation_error {
    using validation_error::validation_error;
};
struct truncation_too_short : validation_error {
    using validation_error::validation_error;
};
struct negative_power : validation_error {
    using validation_error::validation_error;
};

struct zero_denominator : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};
struct not_ordinary : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};
struct not_rank_one : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};

}  // namespace ggp
