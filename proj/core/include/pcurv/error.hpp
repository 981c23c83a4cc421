#pragma once

#include <stdexcept>
#include <string>

namespace pcurv {

// Exit-status classes mirror the CLI verdict codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Bad prime for the root system, or an axiom system without a unique solution.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// An inconsistent stable-envelope system or a non-cancelling basis change;
// almost always a sign-convention mismatch.
class ConventionError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pcurv
