#pragma once

#include <stdexcept>
#include <string>

namespace pcprod {

enum class ErrorKind {
  kInvalidParameter,
  kSearchBudgetExceeded,
  kResourceExceeded,
  kParse,
  kIo,
};

const char *to_string(ErrorKind kind);

// All library failures are reported through this type. Callers that need to
// distinguish an inexact answer from a bad input switch on kind().
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(const std::string &what) {
  throw Error(ErrorKind::kInvalidParameter, what);
}

} // namespace pcprod
