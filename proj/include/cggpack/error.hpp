#pragma once

#include <stdexcept>
#include <string>

namespace cggpack {

// Violated operation precondition (bad parameter, invalid partition, even m, ...).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested pipeline route is not supported for the input (e.g. chi_c > 4).
struct route_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An independently checked artifact (packing, certificate) failed verification.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cggpack
