#pragma once

#include <stdexcept>
#include <string>

namespace zetafield {

// Violated mathematical precondition (bad range, mismatched inputs, ...).
// The CLI maps these to exit code 1.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Grid too coarse for the requested prime limit.
class resolution_error : public domain_error {
 public:
  explicit resolution_error(const std::string& what) : domain_error(what) {}
};

// File / persistence failures. Carries the offending path in the message.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Bad invocation (unknown key, missing config, ...). CLI exit code 2.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zetafield
