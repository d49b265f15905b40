#pragma once

#include <stdexcept>
#include <string>

namespace qlsim {

/// Caller misuse: bad index, non-unitary argument, invalid flag value.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A value that is supposed to represent a physical state does not.
struct InvalidStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Kraus set that is not trace preserving.
struct InvalidChannelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An Euler step left the Bloch ball; dt is too coarse for this generator.
struct StepTooLargeError : std::runtime_error {
    StepTooLargeError(const std::string& msg, std::size_t step)
        : std::runtime_error(msg), step_index(step) {}
    std::size_t step_index;
};

}  // namespace qlsim
