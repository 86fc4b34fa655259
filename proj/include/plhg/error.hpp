#pragma once

#include <stdexcept>
#include <string>

namespace plhg {

/// Broad failure classes. The C API and the CLI map these onto status and
/// exit codes, so new values must be added there too.
enum class ErrorCode {
  InvalidArgument,  // bad call-site input (indices, tuple shapes, sizes)
  Domain,           // mathematical precondition (moment undefined, regime)
  Config,           // invalid model / experiment configuration
  Guard,            // enumeration or brute-force size guard exceeded
  Parse,            // malformed input file
  Io,               // filesystem failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace plhg
