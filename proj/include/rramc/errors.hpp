// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace rramc {

/// Base class for all rramc errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid (M, N, B) combination.
class GeometryError : public Error {
public:
  enum class Kind { NonPowerOfTwo, InvalidColumnCount, InvalidWordWidth };

  GeometryError(Kind kind, const std::string& msg) : Error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Profile file parse or validation failure.
class ProfileError : public Error {
public:
  using Error::Error;
};

/// Simulation-level failure (bad address, operation while busy, bad fill).
class SimError : public Error {
public:
  using Error::Error;
};

/// EN asserted while a read sequence is mid-flight.
class OverlappingOperation : public SimError {
public:
  using SimError::SimError;
};

/// Operation script parse failure (carries a line number in the message).
class ScriptError : public Error {
public:
  ScriptError(const std::string& msg, int line) : Error(msg), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

}  // namespace rramc
