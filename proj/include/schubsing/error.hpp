#pragma once

#include <stdexcept>
#include <string>

namespace schubsing {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed one-line notation or other unparseable input.
class ParseError : public Error {
 public:
  enum class Kind { BadToken, Empty, NonBijection };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// An operation was called outside its domain (size mismatch, x not below w, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine was asked to run above its configured size bound.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace schubsing
