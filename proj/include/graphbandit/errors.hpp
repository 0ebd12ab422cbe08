#pragma once

#include <stdexcept>
#include <string>

namespace graphbandit {

/// Precondition violated by a caller-supplied argument.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text (edge lists, config files).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An input file parsed but described no graph at all.
struct EmptyGraphError : FormatError {
  using FormatError::FormatError;
};

/// A value outside its admissible domain (e.g. a reward outside [0, 1]).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact exponential-time routine refused an input larger than its limit.
struct SizeLimitError : std::length_error {
  using std::length_error::length_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace graphbandit
