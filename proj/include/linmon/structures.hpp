#pragma once

#include <cstdint>
#include <vector>

#include "linmon/model.hpp"

// Index structures shared by the fast checkers: the event-time partition
// index, a stabbing structure over operation spans, and two lazy segment
// trees over partitions.

namespace linmon {

/// Contiguous, inclusive range of partition indices; empty when lo > hi.
struct PartitionRange {
  std::int32_t lo = 0;
  std::int32_t hi = -1;
  bool empty() const { return lo > hi; }
};

/// Critical interval of a value: [min response, max invocation] over a
/// designated op set. Blocks partitions only when lo < hi.
struct CriticalInterval {
  Time lo = 0;  // min res
  Time hi = 0;  // max inv
  bool blocking() const { return lo < hi; }
};

/// Sorted distinct event times e_1 < ... < e_k inducing k+1 open partitions
/// P_0 = (-inf, e_1), P_i = (e_i, e_{i+1}), P_k = (e_k, +inf). Every
/// operation span is a union of whole partitions plus boundary points, so a
/// partition intersecting a span is contained in it.
class PartitionIndex {
 public:
  PartitionIndex() = default;
  explicit PartitionIndex(const History& h);

  std::int32_t num_partitions() const { return static_cast<std::int32_t>(times_.size()) + 1; }
  /// Index of an event time; the time must occur in the history.
  std::int32_t rank(Time t) const;

  /// Partitions blocked by a critical interval: left bound >= lo and right
  /// bound <= hi. Empty when the interval is not blocking.
  PartitionRange blocked_range(const CriticalInterval& ci) const;
  /// Partitions strictly inside the open span (t_inv, t_res).
  PartitionRange span_range(const Operation& op) const;

 private:
  std::vector<Time> times_;
};

// ---------------------------------------------------------------------------
// MinTagSegTree: the stack checker's partition tree. Each partition carries
// (weight, tag); range updates add a delta to both; the global query returns
// the leftmost minimum-weight partition with its weight and tag. The tag is
// meaningful only at weight 1, where it equals the unique covering value.
// ---------------------------------------------------------------------------

class MinTagSegTree {
 public:
  static constexpr std::int64_t kInfinity = std::int64_t{1} << 40;

  explicit MinTagSegTree(std::int32_t n_partitions);

  void update_range(PartitionRange r, std::int64_t d_weight, std::int64_t d_tag);
  /// Sets the partition's weight and tag to effectively infinite so it can
  /// never be returned again.
  void disable_point(std::int32_t partition);

  struct MinEntry {
    std::int32_t partition;
    std::int64_t weight;
    std::int64_t tag;
  };
  MinEntry query_min() const { return {pos_[1], weight_[1], tag_[1]}; }

  std::int32_t size() const { return n_; }

 private:
  void push(std::size_t node);
  void pull(std::size_t node);
  void update(std::size_t node, std::int32_t lo, std::int32_t hi, std::int32_t l, std::int32_t r,
              std::int64_t dw, std::int64_t dt);

  std::int32_t n_ = 0;
  std::vector<std::int64_t> weight_, tag_, lazy_w_, lazy_t_;
  std::vector<std::int32_t> pos_;
};

// ---------------------------------------------------------------------------
// CoverSegTree: the priority-queue checker's coverage tree. Range add +1,
// range minimum.
// ---------------------------------------------------------------------------

class CoverSegTree {
 public:
  explicit CoverSegTree(std::int32_t n_partitions);

  void add_range(PartitionRange r, std::int32_t delta = 1);
  /// Minimum coverage over the range; the range must be nonempty.
  std::int64_t min_in_range(PartitionRange r) const;

  std::int32_t size() const { return n_; }

 private:
  void update(std::size_t node, std::int32_t lo, std::int32_t hi, std::int32_t l, std::int32_t r,
              std::int64_t delta);
  std::int64_t query(std::size_t node, std::int32_t lo, std::int32_t hi, std::int32_t l,
                     std::int32_t r) const;

  std::int32_t n_ = 0;
  std::vector<std::int64_t> min_, lazy_;
};

// ---------------------------------------------------------------------------
// OpIntervalTree: stabbing structure over operation spans in partition space,
// with a global index and per-value sub-indexes so that value-filtered
// searches never touch other values' operations. Removal is permanent.
// ---------------------------------------------------------------------------

class OpIntervalTree {
 public:
  struct Entry {
    PartitionRange range;
    std::int32_t value = 0;  // dense value index
  };

  /// kAnyValue searches the global index.
  static constexpr std::int32_t kAnyValue = 0;

  OpIntervalTree() = default;
  /// One entry per operation; entry index doubles as the operation handle.
  OpIntervalTree(std::int32_t num_values, const std::vector<Entry>& entries);

  void remove(std::int32_t op);
  bool removed(std::int32_t op) const { return !alive_[op]; }
  /// Live ops whose range contains the partition; `value` filters to one
  /// value's sub-index when not kAnyValue. Pure query, ascending op order.
  std::vector<std::int32_t> search(std::int32_t partition, std::int32_t value = kAnyValue) const;
  /// True iff any live op of the value remains. O(1).
  bool contains(std::int32_t value) const { return live_per_value_[value] > 0; }

  std::int32_t value_of(std::int32_t op) const { return entries_[op].value; }
  const Entry& entry(std::int32_t op) const { return entries_[op]; }

 private:
  // A bucketed stabbing index over one batch of ranges: buckets keyed by
  // compressed range starts, a position-tracked max-heap on range ends per
  // bucket, and a segment tree of per-bucket maxima for pruning. Members are
  // addressed by dense local indices so per-value instances stay O(|members|).
  class StabIndex {
   public:
    /// Returns the local index of each member, in member order.
    void build(std::vector<std::int32_t> member_ops, std::vector<std::int32_t> lo,
               std::vector<std::int32_t> hi);
    void erase(std::int32_t local);
    void collect(std::int32_t partition, std::vector<std::int32_t>& out_ops) const;

   private:
    void heap_sift_up(std::int32_t b, std::int32_t i);
    void heap_sift_down(std::int32_t b, std::int32_t i);
    std::int32_t bucket_max(std::int32_t b) const;
    void refresh_tree(std::int32_t b);
    void collect_bucket(std::int32_t b, std::int32_t partition,
                        std::vector<std::int32_t>& out_ops) const;
    void collect_tree(std::size_t node, std::int32_t lo, std::int32_t hi, std::int32_t limit,
                      std::int32_t partition, std::vector<std::int32_t>& out_ops) const;

    std::vector<std::int32_t> ops_, lo_, hi_;       // per local index
    std::vector<std::int32_t> starts_;              // sorted distinct range starts
    std::vector<std::vector<std::int32_t>> heaps_;  // per bucket: locals, max-heap on hi_
    std::vector<std::int32_t> heap_pos_, bucket_;   // per local index
    std::vector<std::int32_t> tree_;                // segment tree of bucket maxima
    std::int32_t tree_leaves_ = 0;
  };

  std::vector<Entry> entries_;
  std::vector<bool> alive_;
  std::vector<std::int32_t> live_per_value_;
  std::vector<std::int32_t> global_local_;  // per op: local index in the global index
  std::vector<std::int32_t> value_local_;   // per op: local index in its value's index
  StabIndex global_;
  std::vector<StabIndex> per_value_;
};

}  // namespace linmon
