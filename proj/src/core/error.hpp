#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace orbitk {

// Parse: malformed input files/strings.
// Validation: well-formed input violating a documented precondition
//   (cyclic quiver, ill-formed hom, invalid dg data, ...).
// Internal: a computed invariant failed; never expected.
enum class ErrorKind { Parse, Validation, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& code,
                              const std::string& message) {
  throw Error(kind, code, message);
}

[[noreturn]] inline void fail_validation(const std::string& code,
                                         const std::string& message) {
  fail(ErrorKind::Validation, code, message);
}

[[noreturn]] inline void fail_parse(const std::string& code,
                                    const std::string& message) {
  fail(ErrorKind::Parse, code, message);
}

[[noreturn]] inline void fail_internal(const std::string& message) {
  fail(ErrorKind::Internal, "internal", message);
}

}  // namespace orbitk
