#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linmon/model.hpp"

// Exponential-time ground-truth decision procedure for small histories.
// Used by the differential test suites and to certify generator labels;
// never on the fast path.

namespace linmon {

struct OracleBudget {
  int max_ops = 20;
  std::uint64_t max_states = 1'000'000;
};

enum class OracleVerdict { True, False, BudgetExceeded };

/// An order of operation ids realizable by an injective in-window time
/// assignment whose induced abstract sequence is a member of the spec.
struct Linearization {
  std::vector<std::int64_t> op_ids;
};

/// Memoized DFS over (done-set, AdtState): a pending operation may be
/// linearized next iff its invocation precedes the minimum response among all
/// pending operations. BudgetExceeded is distinct from False and must never
/// be treated as a verdict.
OracleVerdict is_linearizable_bruteforce(const History& h, const OracleBudget& b = {});

/// As above, but returns a witness order when linearizable.
struct FindResult {
  OracleVerdict verdict = OracleVerdict::False;
  std::optional<Linearization> witness;  // set iff verdict == True
};
FindResult find_linearization(const History& h, const OracleBudget& b = {});

}  // namespace linmon
