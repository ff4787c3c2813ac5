#pragma once

#include <stdexcept>
#include <string>

namespace goodsets {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed documents, inconsistent tuple lengths, duplicate points.
class InputError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold (set not good, f not in U(S),
// marginals do not vanish, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search would exceed its configured bound or cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace goodsets
