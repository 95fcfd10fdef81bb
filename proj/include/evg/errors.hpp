#pragma once

#include <stdexcept>
#include <string>

namespace evg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a closure or enumeration would exceed a configured cap.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace evg
