#pragma once

#include <stdexcept>
#include <string>

namespace signrank {

/// Malformed input: bad text, illegal characters, out-of-range indices.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an algorithm does not hold for this input
/// (e.g. VC dimension too large, matrix not regular).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input exceeds the practical limits of an exact/exhaustive routine.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace signrank
