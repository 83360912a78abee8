#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "linmon/framework.hpp"
#include "linmon/standardize.hpp"
#include "linmon/structures.hpp"

// Log-linear stack provider: partitions carry the number of critical
// intervals blocking them; a weight-0 partition certifies every operation
// spanning it, a weight-1 partition certifies that value's operations. A
// value whose operations are all certified is potentially bottom. The naive
// quadratic provider is kept as a test reference.

namespace linmon {

class StackChecker final : public LinPProvider {
 public:
  explicit StackChecker(const StandardizedHistory& h);

  /// Next potentially-bottom value, or kBottom when none exists (the
  /// residual history is non-linearizable).
  std::int32_t next() override;

  struct Permissive {
    std::int32_t partition = -1;       // -1 encodes NULL
    std::int32_t value_filter = 0;     // 0 encodes the any-value filter
    bool is_null() const { return partition < 0; }
  };
  /// Drains pending globally-permissive partitions first, then takes the
  /// global argmin: weight 0 is globally permissive, weight 1 is
  /// value-permissive (recorded as waiting), anything else is NULL. Returned
  /// partitions are point-disabled; no pair is ever returned twice.
  Permissive get_permissive();

  /// Retracts the value's critical interval and promotes its waiting
  /// partitions to globally-permissive pending returns.
  void remove_subhistory(std::int32_t value);

  const OpIntervalTree& ops() const { return ops_; }

 private:
  PartitionIndex partitions_;
  MinTagSegTree partition_set_;
  OpIntervalTree ops_;
  std::vector<PartitionRange> critical_;          // per value
  std::vector<std::vector<std::int32_t>> waiting_;  // per value: partitions
  std::deque<std::int32_t> pending_;
  std::deque<std::int32_t> ready_;                // PotBotVals, FIFO
  std::vector<bool> value_alive_;
};

/// Reference implementation of the potentially-bottom predicate on a raw
/// residual history: every op of the value has a sub-interval of its window
/// outside all other values' critical intervals. Test-only.
bool is_potentially_bottom(const History& h, Value v);
std::optional<Value> get_linp_stack_naive(const History& h);

CheckReport check_stack(const StandardizedHistory& h);

}  // namespace linmon
