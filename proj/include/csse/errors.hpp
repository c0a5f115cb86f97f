#pragma once

#include <stdexcept>
#include <string>

namespace csse {

enum class ErrorCode {
  kInvalidArgument,
  kTailTooHeavy,
  kNotNormalized,
  kDegenerateSuperposition,
  kTargetUnbuildable,
  kAllOutcomesDegenerate,
  kConfig,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define CSSE_DEFINE_ERROR(Name, Code)                                   \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& message) : Error(Code, message) {} \
  };

CSSE_DEFINE_ERROR(InvalidArgument, ErrorCode::kInvalidArgument)
CSSE_DEFINE_ERROR(TailTooHeavy, ErrorCode::kTailTooHeavy)
CSSE_DEFINE_ERROR(NotNormalized, ErrorCode::kNotNormalized)
CSSE_DEFINE_ERROR(DegenerateSuperposition, ErrorCode::kDegenerateSuperposition)
CSSE_DEFINE_ERROR(TargetUnbuildable, ErrorCode::kTargetUnbuildable)
CSSE_DEFINE_ERROR(AllOutcomesDegenerate, ErrorCode::kAllOutcomesDegenerate)
CSSE_DEFINE_ERROR(ConfigError, ErrorCode::kConfig)

#undef CSSE_DEFINE_ERROR

}  // namespace csse
