#pragma once

#include <stdexcept>
#include <string>

namespace arr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad family tag,
/// a + b < 2, mismatched dimensions, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed one of the configured size caps.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap_name, long long limit, long long requested, const std::string& hint = {})
      : Error(cap_name + " exceeded: requested " + std::to_string(requested) + ", limit " +
              std::to_string(limit) + (hint.empty() ? std::string{} : "; " + hint)),
        cap_name_(std::move(cap_name)),
        limit_(limit),
        requested_(requested) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  long long limit() const noexcept { return limit_; }
  long long requested() const noexcept { return requested_; }

 private:
  std::string cap_name_;
  long long limit_;
  long long requested_;
};

/// A numerical procedure failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace arr
