#pragma once

#include <stdexcept>

namespace pframe {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two grid functions live over different subdivision bases.
struct BaseMismatch : Error {
  using Error::Error;
};

/// Requested refinement level below the current one.
struct LevelDecrease : Error {
  using Error::Error;
};

/// Operator digit outside {0,...,M-1}.
struct DigitOutOfRange : Error {
  using Error::Error;
};

/// Dilated operator index outside B x B'.
struct IndexOutOfRange : Error {
  using Error::Error;
};

/// Rows handed to the matrix builder do not form a Parseval frame.
struct NotParsevalInput : Error {
  using Error::Error;
};

/// Dilation requested for a matrix that fails validation.
struct InvalidSource : Error {
  using Error::Error;
};

/// Orthonormal completion ran out of independent seed vectors. Cannot happen
/// for valid inputs; kept as a guarded internal failure.
struct CompletionFailure : Error {
  using Error::Error;
};

/// N' override too small: N * N' must be >= M.
struct InvalidNprime : Error {
  using Error::Error;
};

/// Malformed input file; the message names the offending field.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace pframe
