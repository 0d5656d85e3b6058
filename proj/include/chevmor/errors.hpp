#pragma once

#include <stdexcept>
#include <string>

namespace chevmor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define CHEVMOR_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
  }

CHEVMOR_DEFINE_ERROR(DimMismatch);
CHEVMOR_DEFINE_ERROR(Singular);
CHEVMOR_DEFINE_ERROR(ZeroInverse);
CHEVMOR_DEFINE_ERROR(NoForm);
CHEVMOR_DEFINE_ERROR(NotSimilitude);
CHEVMOR_DEFINE_ERROR(BadLabel);
CHEVMOR_DEFINE_ERROR(BadIndex);
CHEVMOR_DEFINE_ERROR(NotMember);
CHEVMOR_DEFINE_ERROR(InternalStuck);
CHEVMOR_DEFINE_ERROR(NotASquareForFamily);
CHEVMOR_DEFINE_ERROR(FamilyUnsupported);
CHEVMOR_DEFINE_ERROR(GroupMismatch);
CHEVMOR_DEFINE_ERROR(NotNormalizing);
CHEVMOR_DEFINE_ERROR(Inconsistent);
CHEVMOR_DEFINE_ERROR(AmbiguousRecovery);
CHEVMOR_DEFINE_ERROR(RecoveryFailed);
CHEVMOR_DEFINE_ERROR(TooLong);
CHEVMOR_DEFINE_ERROR(NotCodecShape);
CHEVMOR_DEFINE_ERROR(ParseError);

#undef CHEVMOR_DEFINE_ERROR

}  // namespace chevmor
