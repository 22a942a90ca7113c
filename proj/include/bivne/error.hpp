#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bivne {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed configuration or topology document; maps to CLI exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A formula was evaluated outside its domain (zero capacity, infeasible
// placement, allocation over occupied slots).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidIdError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Raised when a solution fails the C1-C11 validator at allocation time.
class RejectionError : public Error {
 public:
  RejectionError(std::string what, std::vector<std::string> constraints)
      : Error(std::move(what)), constraints_(std::move(constraints)) {}

  const std::vector<std::string>& constraints() const { return constraints_; }

 private:
  std::vector<std::string> constraints_;
};

}  // namespace bivne
