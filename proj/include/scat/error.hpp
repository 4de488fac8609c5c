#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A generator level whose raw enumeration would exceed the configured bound.
class FeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Normalization hit its iteration cap.
class RewriteCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pair of terms the engine could not order where a decided order is required.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scat
