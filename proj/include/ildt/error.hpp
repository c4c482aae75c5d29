#pragma once

#include <stdexcept>
#include <string>

namespace ildt {

// Domain error: invalid input, violated precondition, or exceeded resource cap.
// The CLI maps this to exit code 1; usage errors are reported separately.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ildt
