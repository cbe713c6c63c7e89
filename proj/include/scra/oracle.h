/// @file oracle.h
/// Exhaustive reference evaluation of an expanded graph.
///
/// Everything here enumerates the 2^n event assignments directly and shares
/// no code with the MOCUS path, so it can be used to check it.

#ifndef SCRA_ORACLE_H_
#define SCRA_ORACLE_H_

#include <cstddef>
#include <map>

#include "scra/cutsets.h"
#include "scra/expand.h"

namespace scra {

enum class EventState { kSecure, kFailed };

using AssignmentVector = std::map<NodeId, EventState>;

inline constexpr std::size_t kMaxOracleEvents = 20;

/// State of the top gate under a total assignment.
/// @throws Error(kIncompleteAssignment) if an event has no state.
EventState EvaluateStructure(const ExpandedGraph& g, const AssignmentVector& a);

/// Minimal failing event sets, found by enumeration.
/// @throws Error(kTooManyEvents) above kMaxOracleEvents events.
CutsetCollection BruteCutsets(const ExpandedGraph& g);

/// Exact top-event probability for independent events.
/// @throws Error(kTooManyEvents), Error(kMissingProbability)
double ExactProbability(const ExpandedGraph& g, const ProbabilityMap& probs);

}  // namespace scra

#endif  // SCRA_ORACLE_H_
