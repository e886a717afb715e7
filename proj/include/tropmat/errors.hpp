#pragma once

#include <stdexcept>
#include <string>

namespace tropmat {

/// Malformed token, matrix text, or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unbounded arithmetic left the representable range (infinite-extent
/// semirings only; quotient arithmetic saturates and cannot overflow).
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Values, matrices or generators from different semirings were mixed.
class SpecMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter, key or index is outside its documented range.
class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration hit its element limit before a verdict was reached.
class LimitExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tropmat
