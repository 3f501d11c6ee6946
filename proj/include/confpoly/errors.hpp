#ifndef CONFPOLY_ERRORS_HPP
#define CONFPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace confpoly {

// All recoverable failures are reported through these exception types so the
// CLI can map them onto its exit-code contract (validation vs. math failure).

/// Malformed input text (graph, momentum, configuration or point files).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally invalid argument: wrong dimensions, index out of range,
/// a subset that is not a spanning forest, and similar contract breaches.
struct ArgumentError : std::invalid_argument {
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Momentum vector violating conservation, or identically zero where a
/// nonzero external momentum is required.
struct MomentumError : ArgumentError {
  explicit MomentumError(const std::string& what) : ArgumentError(what) {}
};

/// The zero configuration (no nonzero vectors) has no polynomial attached.
struct ZeroConfigError : ArgumentError {
  explicit ZeroConfigError(const std::string& what) : ArgumentError(what) {}
};

/// Instance exceeds a hard resource limit (e.g. more than 64 edges).
struct CapacityError : ArgumentError {
  explicit CapacityError(const std::string& what) : ArgumentError(what) {}
};

/// Randomized point sampling exhausted its retry budget.
struct SamplingError : std::runtime_error {
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent algorithms for the same quantity disagreed.  Reaching this
/// means a bug, so it is separated from input validation for the exit codes.
struct CheckError : std::runtime_error {
  explicit CheckError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace confpoly

#endif
