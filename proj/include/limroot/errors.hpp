#pragma once

#include <stdexcept>
#include <string>

namespace limroot {

// Input errors (CLI exit code 1).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedFamily : InputError {
    using InputError::InputError;
};
struct RankZero : InputError {
    using InputError::InputError;
};
struct SizeBound : InputError {
    using InputError::InputError;
};
struct ZeroRoot : InputError {
    using InputError::InputError;
};
struct NotWhite : InputError {
    using InputError::InputError;
};
struct MalformedDiagram : InputError {
    using InputError::InputError;
};
struct DiagramMismatch : InputError {
    using InputError::InputError;
};
struct DepthTooSmall : InputError {
    using InputError::InputError;
};
struct NotClassifiable : InputError {
    using InputError::InputError;
};
struct UnsupportedTruncation : InputError {
    using InputError::InputError;
};

// Internal consistency failures (CLI exit code 2).
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InvariantViolation(what);
}

}  // namespace limroot
