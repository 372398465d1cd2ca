#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dyadic {

// Failure statuses shared by the arithmetic core, the lifting machinery and
// the pose solvers. The CLI prints the name on stderr.
enum class Status {
  kPrimeMismatch,
  kNonUnit,
  kOutOfRange,
  kDimensionMismatch,
  kRankDeficient,
  kRankDrop,
  kTooManyPoints,
  kRankTestFailed,
  kNoLiftableRoot,
  kXYRecoveryFailed,
  kDegreeAnomaly,
  kMalformedInput,
};

std::string_view StatusName(Status status);

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what)
      : std::runtime_error(std::string(StatusName(status)) + ": " + what),
        status_(status) {}

  Status status() const { return status_; }

 private:
  Status status_;
};

}  // namespace dyadic
