#pragma once

#include <stdexcept>
#include <string>

namespace fognet {

// Error taxonomy mirrored by the CLI exit codes:
//   UsageError -> 1, DataError -> 2, NumericError -> 3.

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Anything wrong with input files or their contents: missing columns,
// unparsable cells, bad checkpoint bytes, mismatched id sets.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor shape violations and numeric failures (non-finite loss, invalid
// hyperparameters, undefined variance).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fognet
