/// @file error.h
/// Exception types thrown by the risk engine.

#ifndef SCRA_ERROR_H_
#define SCRA_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scra {

/// Machine-readable error category.
///
/// The first block doubles as the rule set checked by graph validation.
enum class ErrorCode {
  // Structural rules of a system graph.
  kDuplicateNodeId,
  kUnknownEndpoint,
  kIllegalEdgeKind,
  kCycleDetected,
  kMultipleSuppliers,
  kEmptyIndicators,
  kNotAComponent,
  kUnreachableNode,  ///< Warning only; never thrown by graph construction.
  kInvalidId,
  kProbabilityOutOfRange,
  kDuplicateEdge,
  // Perturbations.
  kUnknownNode,
  kLastIndicator,
  kUnknownEdge,
  kWouldCreateCycle,
  kMarginOutOfRange,
  // Analysis.
  kMissingProbability,
  kEmptyCollection,
  kGateCycle,
  kUnknownInput,
  // Reference oracle.
  kTooManyEvents,
  kIncompleteAssignment,
  // Text format.
  kSyntax,
};

/// Stable kebab-free name of the code, e.g. "CycleDetected".
std::string_view ToString(ErrorCode code);

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class Severity { kError, kWarning };

/// One broken structural rule together with the ids that break it.
struct Violation {
  ErrorCode rule;
  Severity severity = Severity::kError;
  std::vector<std::string> ids;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Thrown when a graph fails validation.
///
/// code() is the rule of the first error-severity violation.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Syntax or semantic error in a graph file, located in the source text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::string snippet, ErrorCode rule = ErrorCode::kSyntax);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }
  const std::string& snippet() const { return snippet_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
  std::string snippet_;
};

}  // namespace scra

#endif  // SCRA_ERROR_H_
