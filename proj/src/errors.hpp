#pragma once

#include <stdexcept>
#include <string>

namespace concavehull {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  TooFewPoints,
  DegenerateInput,
  CorruptBoundary,
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace concavehull
