#pragma once

#include <stdexcept>
#include <string>

namespace csn {

/// Base class for all library errors. `exit_code` is the process exit
/// status the command line tool maps the error to.
class Error : public std::runtime_error {
 public:
  Error(std::string msg, int exit_code)
      : std::runtime_error(std::move(msg)), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

/// Malformed input: files, strings, or out-of-range parameters.
class ParseError : public Error {
 public:
  explicit ParseError(std::string msg) : Error(std::move(msg), 2) {}
};

/// A matrix did not have the rank a construction requires.
class RankDeficientError : public Error {
 public:
  explicit RankDeficientError(std::string msg) : Error(std::move(msg), 3) {}
};

/// An enumeration guard tripped; rerun with smaller input or --force.
class GuardError : public Error {
 public:
  explicit GuardError(std::string msg) : Error(std::move(msg), 4) {}
};

/// A documented operation precondition does not hold.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(std::string msg) : Error(std::move(msg), 5) {}
};

/// Arithmetic misuse (division by zero and friends).
class DomainError : public Error {
 public:
  explicit DomainError(std::string msg) : Error(std::move(msg), 2) {}
};

}  // namespace csn
