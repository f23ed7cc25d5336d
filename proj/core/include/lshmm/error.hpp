#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lshmm {

// All library failures are thrown as Error. `code` is a short stable
// identifier (E_RANGE, E_DIM, E_STATE, E_FORMAT, E_IO, E_VALUE,
// E_UNSUPPORTED) that the CLI maps onto machine-parseable diagnostics;
// `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

}  // namespace lshmm
