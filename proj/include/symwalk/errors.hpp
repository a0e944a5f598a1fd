#pragma once

#include <stdexcept>
#include <string>

namespace symwalk {

/// Process exit codes shared by the library error types and the CLI.
enum class ExitCode : int {
  ok = 0,
  usage = 1,
  verification_failure = 2,
  resource_limit = 3,
};

/// Base class for every error raised by the library. Each error carries the
/// exit code the command-line tool reports for it.
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, ExitCode code)
      : std::runtime_error(what), code_(code) {}

  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

class InvalidPartition : public Error {
 public:
  explicit InvalidPartition(const std::string& what)
      : Error("invalid partition: " + what, ExitCode::usage) {}
};

class InvalidPermutation : public Error {
 public:
  explicit InvalidPermutation(const std::string& what)
      : Error("invalid permutation: " + what, ExitCode::usage) {}
};

class SizeMismatch : public Error {
 public:
  explicit SizeMismatch(const std::string& what)
      : Error("size mismatch: " + what, ExitCode::usage) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error("domain error: " + what, ExitCode::usage) {}
};

class DegenerateGenerator : public Error {
 public:
  explicit DegenerateGenerator(const std::string& what)
      : Error("degenerate generator: " + what, ExitCode::usage) {}
};

class SupportMismatch : public Error {
 public:
  explicit SupportMismatch(const std::string& what)
      : Error("support mismatch: " + what, ExitCode::usage) {}
};

class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(const std::string& what)
      : Error("resource limit: " + what, ExitCode::resource_limit) {}
};

/// Raised when an exact identity that must hold by construction fails.
/// Always indicates a bug in the character engine or the spectrum code.
class InternalConsistency : public Error {
 public:
  explicit InternalConsistency(const std::string& what)
      : Error("internal consistency: " + what, ExitCode::verification_failure) {}
};

}  // namespace symwalk
