#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace neqrad {

// All library errors carry a short stable code ("nonpositive-beta",
// "reducible-system", ...) so callers and the CLI can act on them without
// parsing prose.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Rejected input: nothing was computed. CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A computation could not proceed or produced unusable numbers. CLI exit
// code 3.
class NumericsError : public Error {
 public:
  using Error::Error;
};

}  // namespace neqrad
