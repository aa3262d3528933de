#pragma once

#include <stdexcept>

namespace mayer {

// Raised when a request exceeds what the representation or a desk-scale
// enumeration can handle (too many vertices, too many masks, ...).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mayer
