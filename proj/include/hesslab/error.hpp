#pragma once

#include <stdexcept>
#include <string>

namespace hesslab {

enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kPrecondition = 3,
  kGoodPosition = 4,
  kIo = 5,
  kInternal = 6,
};

// Every failure raised by the core library carries one of the codes above so
// the C boundary can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hesslab
