#pragma once

#include <stdexcept>
#include <string>

namespace skewbrace {

/// Exception carrying a short machine-readable code ("aut-size-mismatch",
/// "oracle-too-large", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// Raised when a caller hands in parameters outside the supported domain.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Raised when a search or oracle would exceed its size gate.
class ResourceLimit : public Error {
public:
  using Error::Error;
};

/// Raised when an internal cross-check disagrees with a published value.
class ConsistencyFailure : public Error {
public:
  using Error::Error;
};

} // namespace skewbrace
