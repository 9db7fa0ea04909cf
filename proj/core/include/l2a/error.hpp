#ifndef L2A_ERROR_HPP
#define L2A_ERROR_HPP

#include <stdexcept>
#include <string>

namespace l2a {

enum class ErrorCode {
  Parse,
  DimensionMismatch,
  Structural,
  Singular,
  NotLieMorphism,
  NotIntertwiner,
  InvalidQuadruple,
  Internal,
};

const char* error_code_name(ErrorCode code);

/// Library exception carrying a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace l2a

#endif  // L2A_ERROR_HPP
