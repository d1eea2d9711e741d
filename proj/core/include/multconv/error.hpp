#pragma once

#include <stdexcept>
#include <string>

namespace multconv {

enum class ErrorKind {
  DimensionMismatch,
  Precondition,
  BoundExceeded,
  Parse,
};

/* Every failure raised by the library. The CLI maps all kinds to exit code 2. */
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require_same_dim(int a, int b, const char* where) {
  if (a != b) {
    fail(ErrorKind::DimensionMismatch,
         std::string(where) + ": dimension mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace multconv
