#pragma once

#include <stdexcept>

namespace evit {

// Invalid user input or violated precondition. CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// IO failures and malformed files: bad magic, unsupported version,
// truncation, corrupt bitstreams. CLI exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace evit
