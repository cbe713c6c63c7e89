#include "scra/error.h"

#include <algorithm>

namespace scra {

std::string_view ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateNodeId: return "DuplicateNodeId";
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kIllegalEdgeKind: return "IllegalEdgeKind";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kMultipleSuppliers: return "MultipleSuppliers";
    case ErrorCode::kEmptyIndicators: return "EmptyIndicators";
    case ErrorCode::kNotAComponent: return "NotAComponent";
    case ErrorCode::kUnreachableNode: return "UnreachableNode";
    case ErrorCode::kInvalidId: return "InvalidId";
    case ErrorCode::kProbabilityOutOfRange: return "ProbabilityOutOfRange";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kLastIndicator: return "LastIndicator";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kWouldCreateCycle: return "WouldCreateCycle";
    case ErrorCode::kMarginOutOfRange: return "MarginOutOfRange";
    case ErrorCode::kMissingProbability: return "MissingProbability";
    case ErrorCode::kEmptyCollection: return "EmptyCollection";
    case ErrorCode::kGateCycle: return "GateCycle";
    case ErrorCode::kUnknownInput: return "UnknownInput";
    case ErrorCode::kTooManyEvents: return "TooManyEvents";
    case ErrorCode::kIncompleteAssignment: return "IncompleteAssignment";
    case ErrorCode::kSyntax: return "Syntax";
  }
  return "Unknown";
}

namespace {

ErrorCode FirstErrorRule(const std::vector<Violation>& violations) {
  auto it = std::find_if(violations.begin(), violations.end(), [](auto& v) {
    return v.severity == Severity::kError;
  });
  return it == violations.end() ? ErrorCode::kSyntax : it->rule;
}

std::string Describe(const std::vector<Violation>& violations) {
  std::string out = "invalid system graph";
  for (const Violation& v : violations) {
    if (v.severity != Severity::kError) continue;
    out += "; ";
    out += v.message;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(FirstErrorRule(violations), Describe(violations)),
      violations_(std::move(violations)) {}

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::string message, std::string snippet,
                       ErrorCode rule)
    : Error(rule, "line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(std::move(message)),
      snippet_(std::move(snippet)) {}

}  // namespace scra
