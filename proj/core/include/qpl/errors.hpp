#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpl {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Source or range of a proposed arrow leaves the unit space.
struct InvalidArrow : Error {
    using Error::Error;
};

/// Arrows whose source/range do not match cannot be composed.
struct NotComposable : Error {
    using Error::Error;
};

/// Argument outside the documented domain (k <= 0, non-unit gauge scalar, ...).
struct BadParameter : Error {
    using Error::Error;
};

/// Element expected to be supported on a fixed set of degree slices.
struct NotDegreeGraded : Error {
    using Error::Error;
};

/// Incompatible matrix dimensions.
struct SizeMismatch : Error {
    using Error::Error;
};

/// Element whose defect operators are not exact projections.
struct NotPartialIsometry : Error {
    using Error::Error;
};

/// Certificate rejected. move_index is the first failing move; it equals the
/// number of moves when every move applied but the final state does not match
/// the claimed class.
struct BadCertificate : Error {
    std::size_t move_index;
    BadCertificate(std::size_t index, const std::string& message)
        : Error(message), move_index(index) {}
};

}  // namespace qpl
