#ifndef PLURIND_ERROR_HPP
#define PLURIND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace plurind {

// Error categories, aligned with the CLI exit codes and the C API status
// values (see include/plurind.h).
enum class ErrorCode {
  Parse = 2,       // malformed system file
  Degenerate = 3,  // zero polynomial, common component, non-discrete zero set
  Dimension = 4,   // more than 4 variables, or mixed dimensions
  Invalid = 5,     // bad argument (nonpositive direction, empty input, ...)
  Numeric = 6,     // iteration failed to converge after all retries
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

}  // namespace plurind

#endif
