#include "linmon/structures.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace linmon {

// ---------------------------------------------------------------------------
// PartitionIndex
// ---------------------------------------------------------------------------

PartitionIndex::PartitionIndex(const History& h) {
  times_.reserve(h.ops.size() * 2);
  for (const auto& op : h.ops) {
    times_.push_back(op.t_inv);
    times_.push_back(op.t_res);
  }
  std::sort(times_.begin(), times_.end());
  times_.erase(std::unique(times_.begin(), times_.end()), times_.end());
}

std::int32_t PartitionIndex::rank(Time t) const {
  auto it = std::lower_bound(times_.begin(), times_.end(), t);
  assert(it != times_.end() && *it == t);
  return static_cast<std::int32_t>(it - times_.begin());
}

PartitionRange PartitionIndex::blocked_range(const CriticalInterval& ci) const {
  if (!ci.blocking()) return {};
  return {rank(ci.lo) + 1, rank(ci.hi)};
}

PartitionRange PartitionIndex::span_range(const Operation& op) const {
  return {rank(op.t_inv) + 1, rank(op.t_res)};
}

// ---------------------------------------------------------------------------
// MinTagSegTree
// ---------------------------------------------------------------------------

MinTagSegTree::MinTagSegTree(std::int32_t n_partitions) : n_(n_partitions) {
  std::size_t cap = 4 * static_cast<std::size_t>(std::max(n_, 1));
  weight_.assign(cap, 0);
  tag_.assign(cap, 0);
  lazy_w_.assign(cap, 0);
  lazy_t_.assign(cap, 0);
  pos_.assign(cap, 0);
  if (n_ == 0) return;
  // Initialize argmin positions to the leftmost leaf of each subtree.
  struct Frame {
    std::size_t node;
    std::int32_t lo, hi;
  };
  std::vector<Frame> stack{{1, 0, n_ - 1}};
  while (!stack.empty()) {
    auto [node, lo, hi] = stack.back();
    stack.pop_back();
    pos_[node] = lo;
    if (lo == hi) continue;
    std::int32_t mid = lo + (hi - lo) / 2;
    stack.push_back({2 * node, lo, mid});
    stack.push_back({2 * node + 1, mid + 1, hi});
  }
}

void MinTagSegTree::push(std::size_t node) {
  if (lazy_w_[node] == 0 && lazy_t_[node] == 0) return;
  for (std::size_t c : {2 * node, 2 * node + 1}) {
    weight_[c] += lazy_w_[node];
    tag_[c] += lazy_t_[node];
    lazy_w_[c] += lazy_w_[node];
    lazy_t_[c] += lazy_t_[node];
  }
  lazy_w_[node] = 0;
  lazy_t_[node] = 0;
}

void MinTagSegTree::pull(std::size_t node) {
  std::size_t l = 2 * node, r = 2 * node + 1;
  std::size_t best = weight_[l] <= weight_[r] ? l : r;  // ties go left
  weight_[node] = weight_[best];
  tag_[node] = tag_[best];
  pos_[node] = pos_[best];
}

void MinTagSegTree::update(std::size_t node, std::int32_t lo, std::int32_t hi, std::int32_t l,
                           std::int32_t r, std::int64_t dw, std::int64_t dt) {
  if (r < lo || hi < l) return;
  if (l <= lo && hi <= r) {
    weight_[node] += dw;
    tag_[node] += dt;
    if (lo != hi) {
      lazy_w_[node] += dw;
      lazy_t_[node] += dt;
    }
    return;
  }
  push(node);
  std::int32_t mid = lo + (hi - lo) / 2;
  update(2 * node, lo, mid, l, r, dw, dt);
  update(2 * node + 1, mid + 1, hi, l, r, dw, dt);
  pull(node);
}

void MinTagSegTree::update_range(PartitionRange r, std::int64_t d_weight, std::int64_t d_tag) {
  if (r.empty() || n_ == 0) return;
  update(1, 0, n_ - 1, r.lo, r.hi, d_weight, d_tag);
}

void MinTagSegTree::disable_point(std::int32_t partition) {
  update_range({partition, partition}, kInfinity, kInfinity);
}

// ---------------------------------------------------------------------------
// CoverSegTree
// ---------------------------------------------------------------------------

CoverSegTree::CoverSegTree(std::int32_t n_partitions) : n_(n_partitions) {
  std::size_t cap = 4 * static_cast<std::size_t>(std::max(n_, 1));
  min_.assign(cap, 0);
  lazy_.assign(cap, 0);
}

void CoverSegTree::update(std::size_t node, std::int32_t lo, std::int32_t hi, std::int32_t l,
                          std::int32_t r, std::int64_t delta) {
  if (r < lo || hi < l) return;
  if (l <= lo && hi <= r) {
    min_[node] += delta;
    lazy_[node] += delta;
    return;
  }
  std::int32_t mid = lo + (hi - lo) / 2;
  update(2 * node, lo, mid, l, r, delta);
  update(2 * node + 1, mid + 1, hi, l, r, delta);
  min_[node] = std::min(min_[2 * node], min_[2 * node + 1]) + lazy_[node];
}

std::int64_t CoverSegTree::query(std::size_t node, std::int32_t lo, std::int32_t hi,
                                 std::int32_t l, std::int32_t r) const {
  if (l <= lo && hi <= r) return min_[node];
  std::int32_t mid = lo + (hi - lo) / 2;
  std::int64_t best;
  if (r <= mid) {
    best = query(2 * node, lo, mid, l, r);
  } else if (l > mid) {
    best = query(2 * node + 1, mid + 1, hi, l, r);
  } else {
    best = std::min(query(2 * node, lo, mid, l, r), query(2 * node + 1, mid + 1, hi, l, r));
  }
  return best + lazy_[node];
}

void CoverSegTree::add_range(PartitionRange r, std::int32_t delta) {
  if (r.empty() || n_ == 0) return;
  update(1, 0, n_ - 1, r.lo, r.hi, delta);
}

std::int64_t CoverSegTree::min_in_range(PartitionRange r) const {
  if (r.empty() || n_ == 0) throw std::invalid_argument("min_in_range on empty range");
  return query(1, 0, n_ - 1, r.lo, r.hi);
}

// ---------------------------------------------------------------------------
// OpIntervalTree::StabIndex
// ---------------------------------------------------------------------------

void OpIntervalTree::StabIndex::build(std::vector<std::int32_t> member_ops,
                                      std::vector<std::int32_t> lo,
                                      std::vector<std::int32_t> hi) {
  ops_ = std::move(member_ops);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  std::int32_t n = static_cast<std::int32_t>(ops_.size());

  starts_ = lo_;
  std::sort(starts_.begin(), starts_.end());
  starts_.erase(std::unique(starts_.begin(), starts_.end()), starts_.end());
  std::int32_t n_buckets = static_cast<std::int32_t>(starts_.size());

  heaps_.assign(n_buckets, {});
  heap_pos_.assign(n, -1);
  bucket_.assign(n, -1);

  tree_leaves_ = 1;
  while (tree_leaves_ < std::max(n_buckets, 1)) tree_leaves_ *= 2;
  tree_.assign(2 * tree_leaves_, -1);

  for (std::int32_t i = 0; i < n; ++i) {
    std::int32_t b = static_cast<std::int32_t>(
        std::lower_bound(starts_.begin(), starts_.end(), lo_[i]) - starts_.begin());
    bucket_[i] = b;
    heaps_[b].push_back(i);
    heap_pos_[i] = static_cast<std::int32_t>(heaps_[b].size()) - 1;
    heap_sift_up(b, heap_pos_[i]);
  }
  for (std::int32_t b = 0; b < n_buckets; ++b) tree_[tree_leaves_ + b] = bucket_max(b);
  for (std::int32_t i = tree_leaves_ - 1; i >= 1; --i) {
    tree_[i] = std::max(tree_[2 * i], tree_[2 * i + 1]);
  }
}

void OpIntervalTree::StabIndex::heap_sift_up(std::int32_t b, std::int32_t i) {
  auto& heap = heaps_[b];
  while (i > 0) {
    std::int32_t parent = (i - 1) / 2;
    if (hi_[heap[parent]] >= hi_[heap[i]]) break;
    std::swap(heap[parent], heap[i]);
    heap_pos_[heap[parent]] = parent;
    heap_pos_[heap[i]] = i;
    i = parent;
  }
}

void OpIntervalTree::StabIndex::heap_sift_down(std::int32_t b, std::int32_t i) {
  auto& heap = heaps_[b];
  std::int32_t n = static_cast<std::int32_t>(heap.size());
  while (true) {
    std::int32_t best = i, l = 2 * i + 1, r = 2 * i + 2;
    if (l < n && hi_[heap[l]] > hi_[heap[best]]) best = l;
    if (r < n && hi_[heap[r]] > hi_[heap[best]]) best = r;
    if (best == i) break;
    std::swap(heap[best], heap[i]);
    heap_pos_[heap[best]] = best;
    heap_pos_[heap[i]] = i;
    i = best;
  }
}

std::int32_t OpIntervalTree::StabIndex::bucket_max(std::int32_t b) const {
  return heaps_[b].empty() ? -1 : hi_[heaps_[b].front()];
}

void OpIntervalTree::StabIndex::refresh_tree(std::int32_t b) {
  std::int32_t i = tree_leaves_ + b;
  tree_[i] = bucket_max(b);
  for (i /= 2; i >= 1; i /= 2) tree_[i] = std::max(tree_[2 * i], tree_[2 * i + 1]);
}

void OpIntervalTree::StabIndex::erase(std::int32_t local) {
  std::int32_t b = bucket_[local];
  auto& heap = heaps_[b];
  std::int32_t pos = heap_pos_[local];
  std::int32_t last = static_cast<std::int32_t>(heap.size()) - 1;
  if (pos != last) {
    std::swap(heap[pos], heap[last]);
    heap_pos_[heap[pos]] = pos;
  }
  heap.pop_back();
  heap_pos_[local] = -1;
  if (pos != last) {
    std::int32_t moved = heap[pos];
    heap_sift_down(b, pos);
    heap_sift_up(b, heap_pos_[moved]);
  }
  refresh_tree(b);
}

void OpIntervalTree::StabIndex::collect_bucket(std::int32_t b, std::int32_t partition,
                                               std::vector<std::int32_t>& out_ops) const {
  // Heap walk: children of a non-matching node cannot match.
  const auto& heap = heaps_[b];
  std::vector<std::int32_t> stack;
  if (!heap.empty() && hi_[heap[0]] >= partition) stack.push_back(0);
  while (!stack.empty()) {
    std::int32_t i = stack.back();
    stack.pop_back();
    out_ops.push_back(ops_[heap[i]]);
    for (std::int32_t c : {2 * i + 1, 2 * i + 2}) {
      if (c < static_cast<std::int32_t>(heap.size()) && hi_[heap[c]] >= partition) {
        stack.push_back(c);
      }
    }
  }
}

void OpIntervalTree::StabIndex::collect_tree(std::size_t node, std::int32_t lo, std::int32_t hi,
                                             std::int32_t limit, std::int32_t partition,
                                             std::vector<std::int32_t>& out_ops) const {
  if (lo >= limit || tree_[node] < partition) return;
  if (lo == hi) {
    collect_bucket(lo, partition, out_ops);
    return;
  }
  std::int32_t mid = lo + (hi - lo) / 2;
  collect_tree(2 * node, lo, mid, limit, partition, out_ops);
  collect_tree(2 * node + 1, mid + 1, hi, limit, partition, out_ops);
}

void OpIntervalTree::StabIndex::collect(std::int32_t partition,
                                        std::vector<std::int32_t>& out_ops) const {
  if (starts_.empty()) return;
  // Buckets with start <= partition and max end >= partition.
  std::int32_t limit = static_cast<std::int32_t>(
      std::upper_bound(starts_.begin(), starts_.end(), partition) - starts_.begin());
  if (limit == 0) return;
  collect_tree(1, 0, tree_leaves_ - 1, limit, partition, out_ops);
}

// ---------------------------------------------------------------------------
// OpIntervalTree
// ---------------------------------------------------------------------------

OpIntervalTree::OpIntervalTree(std::int32_t num_values, const std::vector<Entry>& entries)
    : entries_(entries) {
  std::int32_t n = static_cast<std::int32_t>(entries_.size());
  alive_.assign(n, true);
  live_per_value_.assign(num_values + 1, 0);
  global_local_.assign(n, -1);
  value_local_.assign(n, -1);

  std::vector<std::int32_t> all_ops(n), all_lo(n), all_hi(n);
  std::vector<std::vector<std::int32_t>> members(num_values + 1);
  for (std::int32_t i = 0; i < n; ++i) {
    all_ops[i] = i;
    all_lo[i] = entries_[i].range.lo;
    all_hi[i] = entries_[i].range.hi;
    global_local_[i] = i;
    ++live_per_value_[entries_[i].value];
    members[entries_[i].value].push_back(i);
  }
  global_.build(std::move(all_ops), std::move(all_lo), std::move(all_hi));

  per_value_.resize(num_values + 1);
  for (std::int32_t v = 1; v <= num_values; ++v) {
    std::vector<std::int32_t> lo, hi;
    lo.reserve(members[v].size());
    hi.reserve(members[v].size());
    for (std::size_t j = 0; j < members[v].size(); ++j) {
      std::int32_t op = members[v][j];
      value_local_[op] = static_cast<std::int32_t>(j);
      lo.push_back(entries_[op].range.lo);
      hi.push_back(entries_[op].range.hi);
    }
    per_value_[v].build(std::move(members[v]), std::move(lo), std::move(hi));
  }
}

void OpIntervalTree::remove(std::int32_t op) {
  if (!alive_[op]) throw std::invalid_argument("removing an already-removed op");
  alive_[op] = false;
  --live_per_value_[entries_[op].value];
  global_.erase(global_local_[op]);
  per_value_[entries_[op].value].erase(value_local_[op]);
}

std::vector<std::int32_t> OpIntervalTree::search(std::int32_t partition,
                                                 std::int32_t value) const {
  std::vector<std::int32_t> out;
  if (value == kAnyValue) {
    global_.collect(partition, out);
  } else {
    per_value_[value].collect(partition, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace linmon
