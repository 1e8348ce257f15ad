#pragma once

#include <stdexcept>
#include <string>

namespace arrlab {

// Domain errors carry a stable code used by the CLI for exit status and JSON
// diagnostics. Input errors exit 2, mathematical negatives exit 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define ARRLAB_ERROR(NAME)                                   \
  class NAME : public Error {                                \
   public:                                                   \
    explicit NAME(const std::string& what) : Error(#NAME, what) {} \
  }

ARRLAB_ERROR(ParseError);
ARRLAB_ERROR(DuplicateLine);
ARRLAB_ERROR(DegenerateLine);
ARRLAB_ERROR(DegenerateIntersection);
ARRLAB_ERROR(NotForest);
ARRLAB_ERROR(NotReal);
ARRLAB_ERROR(RankTooLow);
ARRLAB_ERROR(GenericityFailure);
ARRLAB_ERROR(ChangeOfCoordsFailure);
ARRLAB_ERROR(NeedsShear);
ARRLAB_ERROR(EmptyType);
ARRLAB_ERROR(IllegalMove);
ARRLAB_ERROR(NotDirectSumOfFreeGroups);
ARRLAB_ERROR(StructureError);
ARRLAB_ERROR(SearchBoundExceeded);

#undef ARRLAB_ERROR

}  // namespace arrlab
