#pragma once

#include <stdexcept>
#include <string>

namespace unimodal {

// Base class for every domain error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define UNIMODAL_DEFINE_ERROR(NAME)       \
  class NAME : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

UNIMODAL_DEFINE_ERROR(MalformedTextError);
UNIMODAL_DEFINE_ERROR(NotABijectionError);
UNIMODAL_DEFINE_ERROR(IndexOutOfRangeError);
UNIMODAL_DEFINE_ERROR(DegreeMismatchError);
UNIMODAL_DEFINE_ERROR(PatternLargerThanHostError);
UNIMODAL_DEFINE_ERROR(DegreeTooLargeForFactorialScanError);
UNIMODAL_DEFINE_ERROR(UnknownSymmetryNameError);
UNIMODAL_DEFINE_ERROR(ElementOutOfRangeError);
UNIMODAL_DEFINE_ERROR(DegreeTooLargeError);
UNIMODAL_DEFINE_ERROR(NotTransitiveError);
UNIMODAL_DEFINE_ERROR(BadSubsetSizeError);
UNIMODAL_DEFINE_ERROR(InternalOrderInconsistencyError);
UNIMODAL_DEFINE_ERROR(PostValidationFailedError);
UNIMODAL_DEFINE_ERROR(ReconstructionMismatchError);
UNIMODAL_DEFINE_ERROR(LengthTooLargeError);
UNIMODAL_DEFINE_ERROR(OverflowError);
UNIMODAL_DEFINE_ERROR(InconsistentCounterError);
UNIMODAL_DEFINE_ERROR(NotInvariantError);
UNIMODAL_DEFINE_ERROR(AmbiguousMatchingError);
UNIMODAL_DEFINE_ERROR(GridTooCoarseError);
UNIMODAL_DEFINE_ERROR(PreconditionViolatedError);
UNIMODAL_DEFINE_ERROR(SearchSpaceTooLargeError);
UNIMODAL_DEFINE_ERROR(MapValidationError);

#undef UNIMODAL_DEFINE_ERROR

// Unimodality failure remembers the first index pair that breaks the
// increasing-then-decreasing profile.
class NotUnimodalError : public Error {
 public:
  NotUnimodalError(const std::string& what, int a, int b)
      : Error(what), a_(a), b_(b) {}
  int first() const { return a_; }
  int second() const { return b_; }

 private:
  int a_;
  int b_;
};

}  // namespace unimodal
