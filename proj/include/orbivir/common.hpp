#pragma once

#include <stdexcept>
#include <string>

namespace orbivir {

// Error hierarchy. Every failure mode named by the contracts maps to one of
// these; nothing is reported through return codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct range_error : error {
    using error::error;
};

struct shape_error : error {
    using error::error;
};

struct admissibility_error : error {
    using error::error;
};

struct inconsistency_error : error {
    using error::error;
};

struct degenerate_profile_error : error {
    using error::error;
};

struct singular_system_error : error {
    using error::error;
};

struct unsupported_model_error : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

} // namespace orbivir
