#pragma once

#include <stdexcept>
#include <string>

namespace mse {

/// Base error for all failures raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A general-position assumption was violated (coincident heights,
/// degenerate projection, placement on a base point, ...).  These are
/// reported, never silently resolved.
struct DegeneracyError : Error {
    using Error::Error;
};

} // namespace mse
