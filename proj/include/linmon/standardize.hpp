#pragma once

#include <optional>
#include <vector>

#include "linmon/model.hpp"

// Preprocessing pipeline for set/stack/queue/priority-queue histories:
// well-matching completion, invocation/response-time compliance, and
// empty-operation elimination. Register histories bypass this module.

namespace linmon {

/// Per-value operation index over a standardized history (ops addressed by
/// position in history.ops; dense value indices from the value table).
struct ValueOps {
  std::int32_t add = -1;
  std::int32_t remove = -1;
  std::vector<std::int32_t> others;
};

struct StandardizedHistory {
  History history;
  ValueTable values;
  std::vector<std::int32_t> op_value;  // per op: dense value index (never 0 here)
  std::vector<ValueOps> per_value;     // indexed 1..m; slot 0 unused
  std::vector<std::int64_t> synthetic_ids;
};

enum class StandardizeStage { None, Compliance, EmptyCheck };

struct StandardizeResult {
  std::optional<StandardizedHistory> standardized;  // empty => NON_LINEARIZABLE
  StandardizeStage failed_stage = StandardizeStage::None;
};

/// Appends, for every unmatched value, a remove operation on one dedicated
/// synthetic process with consecutive windows after the maximum response
/// time. Values are processed in ascending value-index order.
History complete_matches(const History& h, std::vector<std::int64_t>* synthetic_ids = nullptr);

/// Clamps every operation touching a value into the add/remove windows of
/// that value so that both compliance inequalities hold. Returns nullopt
/// (a verdict, not a fault) when some window collapses.
std::optional<History> enforce_compliance(const History& h);

/// Removes empty operations; returns nullopt when some empty operation's
/// window lies entirely inside the merged union of per-value
/// [res(add), inv(remove)] intervals (the BadZone).
std::optional<History> strip_empty(const History& h);

/// Sorted disjoint merged BadZone intervals, exposed for tests.
std::vector<std::pair<Time, Time>> bad_zone(const History& h);

/// Full pipeline. Precondition: h is well-formed and unambiguous and its adt
/// is not register. For set histories, contains_true/contains_false are
/// rewritten to insert_fail/delete_fail on entry (identical semantics).
StandardizeResult standardize(const History& h);

/// The three standardization predicates, exposed for tests.
bool is_well_matched(const History& h);
bool is_time_compliant(const History& h);
bool is_empty_free(const History& h);

}  // namespace linmon
