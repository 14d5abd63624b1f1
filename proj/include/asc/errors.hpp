#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter outside the domain of an operation (family bounds, r < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed call arguments, e.g. a non-injective vertex map.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The input graph does not satisfy the operation's hypothesis.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Eccentricity is infinite on a disconnected graph.
class DisconnectedError : public PreconditionError {
 public:
  DisconnectedError()
      : PreconditionError("graph is disconnected: infinite eccentricity") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A builder produced something that fails its own invariants.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace asc
