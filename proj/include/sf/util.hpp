#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sf {

// Error with a stable machine-readable code ("NotRegularSequence", ...).
// Codes are part of the CLI contract: they select the process exit status.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

// SHA-256 of a byte string, as lowercase hex.
std::string sha256_hex(const std::string& data);

}  // namespace sf
