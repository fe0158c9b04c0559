#pragma once

#include <stdexcept>
#include <string>

namespace eqdeg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Unknown group/representation descriptor or malformed configuration.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Group too large for direct subgroup enumeration.
class SizeError : public Error {
public:
  using Error::Error;
};

/// Input outside the mathematical domain (immiscibility, critical set, range).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A class that the restriction table does not cover.
class UnsupportedClassError : public Error {
public:
  using Error::Error;
};

/// Broken internal invariant: non-exact division, failed validation, etc.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace eqdeg
