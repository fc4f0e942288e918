#pragma once

#include <stdexcept>
#include <string>

namespace pseudospec {

// Every failure raised by the library derives from Error. The category is
// what the command line driver maps onto its exit codes.
enum class ErrorCategory {
  Structural,     // shapes, lengths, axes that do not fit together
  Domain,         // argument outside the mathematical domain of an operation
  DataIntegrity,  // data that cannot represent what it claims to (e.g. a non-Hermitian spectrum)
  Oracle,         // the exact-solution solver failed to converge
  Instability,    // NaN/Inf or a collapsing time step inside a solver
  Config,         // invalid user supplied parameters
  FileIntegrity,  // corrupted or truncated files, checksum drift
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

struct StructuralError : Error {
  explicit StructuralError(const std::string& what) : Error(ErrorCategory::Structural, what) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorCategory::Domain, what) {}
};

struct DataIntegrityError : Error {
  explicit DataIntegrityError(const std::string& what)
      : Error(ErrorCategory::DataIntegrity, what) {}
};

struct OracleError : Error {
  OracleError(const std::string& what, double x) : Error(ErrorCategory::Oracle, what), x_(x) {}
  /// Grid coordinate at which Newton iteration failed.
  double x() const noexcept { return x_; }

 private:
  double x_;
};

struct InstabilityError : Error {
  InstabilityError(const std::string& what, double t, unsigned long long step)
      : Error(ErrorCategory::Instability, what), t_(t), step_(step) {}
  double t() const noexcept { return t_; }
  unsigned long long step() const noexcept { return step_; }

 private:
  double t_;
  unsigned long long step_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(ErrorCategory::Config, what) {}
};

struct FileIntegrityError : Error {
  explicit FileIntegrityError(const std::string& what)
      : Error(ErrorCategory::FileIntegrity, what) {}
};

}  // namespace pseudospec
