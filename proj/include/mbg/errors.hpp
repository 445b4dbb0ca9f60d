#pragma once

#include <stdexcept>
#include <string>

namespace mbg {

struct illegal_move : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_state : std::logic_error {
    using std::logic_error::logic_error;
};

struct size_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by family builders when the enumeration would exceed the cap.
// Carries an estimate of how many sets would have been produced.
struct family_too_large : std::runtime_error {
    unsigned long long estimated_count;
    family_too_large(const std::string& msg, unsigned long long estimate)
        : std::runtime_error(msg), estimated_count(estimate) {}
};

struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

struct degenerate_parameters : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mbg
