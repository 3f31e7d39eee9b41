#pragma once

#include <stdexcept>
#include <string>

namespace pellkit {

enum class ErrorCode {
  invalid_argument,
  perfect_square,
  not_squarefree,
  factorization_incomplete,
  out_of_range,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pellkit
