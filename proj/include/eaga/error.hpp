#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eaga {

/// Failure families surfaced by the library. The CLI maps each to an exit code.
enum class ErrorCategory {
  kContract,        // caller broke a precondition
  kParse,           // malformed input text
  kValidation,      // well-formed input describing an invalid graph
  kInfeasible,      // requested anonymity level cannot be reached
  kConvergence,     // evolution ran out of generations
  kReconstruction,  // edge rotations hit dead ends on every retry
};

std::string_view category_name(ErrorCategory category) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& message)
      : Error(ErrorCategory::kContract, message) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCategory::kParse,
              line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  /// 1-based line number, or 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorCategory::kValidation, message) {}
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& message)
      : Error(ErrorCategory::kInfeasible, message) {}
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, int best_k)
      : Error(ErrorCategory::kConvergence, message), best_k_(best_k) {}

  int best_k() const noexcept { return best_k_; }

 private:
  int best_k_;
};

class ReconstructionError : public Error {
 public:
  ReconstructionError(const std::string& message, std::size_t attempts)
      : Error(ErrorCategory::kReconstruction, message), attempts_(attempts) {}

  std::size_t attempts() const noexcept { return attempts_; }

 private:
  std::size_t attempts_;
};

}  // namespace eaga
