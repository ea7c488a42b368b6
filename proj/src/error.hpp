#ifndef MCSEG_ERROR_HPP
#define MCSEG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mcseg {

enum class ErrorCode {
  invalid_argument = 1,  // contract violation
  io = 2,
  bad_format = 3,  // malformed file contents / invalid UTF-8
  unknown_criterion = 4,
  training_failure = 5,  // non-finite loss or gradient
  mismatch = 6,          // gold/pred character streams disagree
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace mcseg

#endif
