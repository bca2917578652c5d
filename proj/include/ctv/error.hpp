#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ctv {

enum class ErrorKind {
  DimensionMismatch,
  EmptyPiece,
  RankDeficient,
  InvalidParameter,
  ProfileMismatch,
  Parse,
  CapExceeded,
  DegenerateIntersection,
  NotPrime,
  NonOrientable,
  Precondition,
  ClosureViolation,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Outcome of a certificate check. Checkers never throw on malformed input;
/// they report `ok == false` together with a short reason.
struct Verdict {
  bool ok = true;
  std::string reason;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const noexcept { return ok; }
};

}  // namespace ctv
