#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsi {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input that cannot be parsed or is structurally inconsistent.
class MalformedInput : public Error {
public:
  using Error::Error;
};

/// A precondition on the mathematical objects does not hold.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Stored or derived data failed a consistency check.
class IntegrityError : public Error {
public:
  using Error::Error;
};

class NotFound : public Error {
public:
  using Error::Error;
};

/// The requested case is outside the encoded tables.
class UnsupportedCase : public Error {
public:
  using Error::Error;
};

/// An enumeration would exceed a configured bound.
class CapacityError : public Error {
public:
  CapacityError(const std::string& what, std::uint64_t bound)
      : Error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}

  std::uint64_t bound() const noexcept { return bound_; }

private:
  std::uint64_t bound_;
};

} // namespace qsi
