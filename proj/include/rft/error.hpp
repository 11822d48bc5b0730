#pragma once

#include <stdexcept>
#include <string>

namespace rft {

// Error categories; values line up with the C API status codes and the CLI
// exit codes, so they must not be renumbered.
enum class ErrorCode : int {
  parse = 2,
  invariant = 3,
  numeric = 4,
  io = 5,
  invalid_argument = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace rft
