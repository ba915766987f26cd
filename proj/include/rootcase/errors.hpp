#pragma once

#include <stdexcept>
#include <string>

namespace rootcase {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ROOTCASE_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                               \
    explicit Name(const std::string& what = #Name) : Error(what) {}   \
  }

ROOTCASE_DEFINE_ERROR(ParseError);
ROOTCASE_DEFINE_ERROR(InvalidRank);
ROOTCASE_DEFINE_ERROR(DimensionMismatch);
ROOTCASE_DEFINE_ERROR(NotRootAngle);
ROOTCASE_DEFINE_ERROR(ZeroRoot);
ROOTCASE_DEFINE_ERROR(InvalidPair);
ROOTCASE_DEFINE_ERROR(NotARoot);
ROOTCASE_DEFINE_ERROR(NotInHPart);
ROOTCASE_DEFINE_ERROR(ZeroProjection);
ROOTCASE_DEFINE_ERROR(InconsistentTransport);
ROOTCASE_DEFINE_ERROR(NotOddModel);
ROOTCASE_DEFINE_ERROR(NotEvenModel);
ROOTCASE_DEFINE_ERROR(MalformedCase2Model);
ROOTCASE_DEFINE_ERROR(UnmatchedPair);
ROOTCASE_DEFINE_ERROR(ZeroParameter);
ROOTCASE_DEFINE_ERROR(ConfigError);

#undef ROOTCASE_DEFINE_ERROR

}  // namespace rootcase
