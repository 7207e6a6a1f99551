#pragma once

#include <stdexcept>
#include <string>

namespace thetalgr {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
  kParse = 2,      ///< malformed textual input
  kInvariant = 3,  ///< a value violates a type invariant (e.g. not Lagrangian)
  kDomain = 4,     ///< an operation's precondition does not hold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_parse(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}
[[noreturn]] inline void throw_invariant(const std::string& what) {
  throw Error(ErrorCode::kInvariant, what);
}
[[noreturn]] inline void throw_domain(const std::string& what) {
  throw Error(ErrorCode::kDomain, what);
}

}  // namespace thetalgr
