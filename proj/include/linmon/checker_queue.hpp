#pragma once

#include <optional>
#include <vector>

#include "linmon/framework.hpp"
#include "linmon/standardize.hpp"

// Log-linear queue provider. A value is potentially front when (1) its
// enqueue is invoked before every other live value's enqueue responds and
// (2) each of its peek/deq ops is invoked before every other live value's
// peek/deq responds. Both predicates are monotone under removal of other
// values, so two lazy iterators enumerate them once each and the provider
// returns values that have satisfied both.

namespace linmon {

class QueueChecker final : public LinPProvider {
 public:
  explicit QueueChecker(const StandardizedHistory& h);

  std::int32_t next() override;
  void notify_removed(std::int32_t value) override;

  /// Next value satisfying frontEnq on the residual, or 0 when none is ready.
  /// Each value is returned at most once across calls.
  std::int32_t next_front_enq();
  /// Next value satisfying frontPeekDeq on the residual, or 0.
  std::int32_t next_front_peekdeq();

 private:
  struct EnqEvent {
    Time t;
    std::int32_t value;
    bool is_response;
  };

  // Sorted-order doubly linked list with per-value handles; supports head
  // pops and arbitrary unlinks for the lazy staleness discipline.
  struct EventList {
    std::vector<Time> time;            // per slot
    std::vector<std::int32_t> value;   // per slot
    std::vector<std::int32_t> next, prev;
    std::vector<std::int32_t> slot_of_value;  // dense value -> slot (or -1)
    std::int32_t head = -1;
    std::int32_t live = 0;

    void build(std::vector<std::pair<Time, std::int32_t>> sorted, std::int32_t num_values);
    void unlink(std::int32_t slot);
    bool contains(std::int32_t v) const { return slot_of_value[v] >= 0; }
  };

  std::vector<bool> alive_;
  std::vector<bool> in_front_enq_, in_front_peekdeq_;
  std::vector<EnqEvent> enq_events_;  // responses before invocations on ties
  std::size_t enq_pos_ = 0;
  EventList min_res_;  // per value: min response over its peek/deq ops
  EventList max_inv_;  // per value: max invocation over its peek/deq ops
  std::vector<Time> max_inv_of_;
};

/// Direct check of the potentially-front definition on a residual described
/// by an alive mask (dense value indices). Test-only reference.
std::optional<std::int32_t> get_linp_queue_naive(const StandardizedHistory& h,
                                                 const std::vector<bool>& alive);
bool is_potentially_front(const StandardizedHistory& h, const std::vector<bool>& alive,
                          std::int32_t v);

CheckReport check_queue(const StandardizedHistory& h);

}  // namespace linmon
