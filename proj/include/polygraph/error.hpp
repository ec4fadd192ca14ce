#pragma once

#include <stdexcept>
#include <string>

namespace polygraph {

// Error taxonomy mirrors the CLI exit codes:
//   ConfigError -> 2 (usage / configuration)
//   DataError   -> 3 (malformed or inconsistent input data)
//   NumericError-> 4 (non-finite values, failed numerical contracts)
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polygraph
