#pragma once
#include <stdexcept>
#include <string>

namespace ecfb {

// Thrown when an iterative algorithm fails to converge or a computed quantity
// leaves the range where the model is meaningful.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ecfb
