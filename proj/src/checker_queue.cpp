#include "linmon/checker_queue.hpp"

#include <algorithm>
#include <limits>

namespace linmon {

void QueueChecker::EventList::build(std::vector<std::pair<Time, std::int32_t>> sorted,
                                    std::int32_t num_values) {
  std::sort(sorted.begin(), sorted.end());
  std::int32_t n = static_cast<std::int32_t>(sorted.size());
  time.resize(n);
  value.resize(n);
  next.assign(n, -1);
  prev.assign(n, -1);
  slot_of_value.assign(num_values + 1, -1);
  for (std::int32_t i = 0; i < n; ++i) {
    time[i] = sorted[i].first;
    value[i] = sorted[i].second;
    slot_of_value[value[i]] = i;
    next[i] = i + 1 < n ? i + 1 : -1;
    prev[i] = i - 1;
  }
  head = n > 0 ? 0 : -1;
  live = n;
}

void QueueChecker::EventList::unlink(std::int32_t slot) {
  if (prev[slot] >= 0) next[prev[slot]] = next[slot];
  if (next[slot] >= 0) prev[next[slot]] = prev[slot];
  if (head == slot) head = next[slot];
  slot_of_value[value[slot]] = -1;
  --live;
}

QueueChecker::QueueChecker(const StandardizedHistory& h)
    : alive_(h.values.size() + 1, true),
      in_front_enq_(h.values.size() + 1, false),
      in_front_peekdeq_(h.values.size() + 1, false),
      max_inv_of_(h.values.size() + 1, std::numeric_limits<Time>::min()) {
  std::vector<Time> min_res_of(h.values.size() + 1, std::numeric_limits<Time>::max());
  for (std::size_t i = 0; i < h.history.ops.size(); ++i) {
    const Operation& op = h.history.ops[i];
    std::int32_t v = h.op_value[i];
    if (op.method == Method::Enq) {
      enq_events_.push_back({op.t_inv, v, false});
      enq_events_.push_back({op.t_res, v, true});
    } else {
      // peek or deq: the appended removes guarantee at least one per value
      min_res_of[v] = std::min(min_res_of[v], op.t_res);
      max_inv_of_[v] = std::max(max_inv_of_[v], op.t_inv);
    }
  }
  // frontEnq needs strict inv < res, so responses block equal-time
  // invocations: responses sort first on ties.
  std::sort(enq_events_.begin(), enq_events_.end(), [](const EnqEvent& a, const EnqEvent& b) {
    if (a.t != b.t) return a.t < b.t;
    if (a.is_response != b.is_response) return a.is_response;
    return a.value < b.value;
  });

  std::vector<std::pair<Time, std::int32_t>> mr, mi;
  for (std::int32_t v = 1; v <= h.values.size(); ++v) {
    mr.emplace_back(min_res_of[v], v);
    mi.emplace_back(max_inv_of_[v], v);
  }
  min_res_.build(std::move(mr), h.values.size());
  max_inv_.build(std::move(mi), h.values.size());
}

std::int32_t QueueChecker::next_front_enq() {
  while (enq_pos_ < enq_events_.size()) {
    const EnqEvent& e = enq_events_[enq_pos_];
    // A response of a live enq bounds every later invocation; stop here and
    // retry after removals.
    if (e.is_response && alive_[e.value]) return 0;
    ++enq_pos_;
    if (!e.is_response) return e.value;
  }
  return 0;
}

std::int32_t QueueChecker::next_front_peekdeq() {
  // Lazily drop dead values from the first two positions; deeper stale
  // entries cannot influence the comparisons below.
  while (min_res_.head >= 0 && !alive_[min_res_.value[min_res_.head]]) {
    min_res_.unlink(min_res_.head);
  }
  while (min_res_.head >= 0) {
    std::int32_t second = min_res_.next[min_res_.head];
    if (second >= 0 && !alive_[min_res_.value[second]]) {
      min_res_.unlink(second);
    } else {
      break;
    }
  }
  if (max_inv_.head < 0 || min_res_.head < 0) return 0;

  // Candidate strictly below the global minimum response.
  if (max_inv_.time[max_inv_.head] < min_res_.time[min_res_.head]) {
    std::int32_t v = max_inv_.value[max_inv_.head];
    max_inv_.unlink(max_inv_.head);
    return v;
  }

  // The value holding the global minimum response competes against the
  // second-smallest response instead of its own.
  std::int32_t v = min_res_.value[min_res_.head];
  Time t = max_inv_of_[v];
  std::int32_t second = min_res_.next[min_res_.head];
  if (max_inv_.contains(v) && (second < 0 || t < min_res_.time[second])) {
    max_inv_.unlink(max_inv_.slot_of_value[v]);
    return v;
  }
  return 0;
}

std::int32_t QueueChecker::next() {
  while (true) {
    std::int32_t v1 = next_front_enq();
    if (v1 != 0) {
      in_front_enq_[v1] = true;
      if (in_front_peekdeq_[v1]) return v1;
    }
    std::int32_t v2 = next_front_peekdeq();
    if (v2 != 0) {
      in_front_peekdeq_[v2] = true;
      if (in_front_enq_[v2]) return v2;
    }
    if (v1 == 0 && v2 == 0) return kBottom;
  }
}

void QueueChecker::notify_removed(std::int32_t value) { alive_[value] = false; }

// ---------------------------------------------------------------------------
// Naive reference
// ---------------------------------------------------------------------------

bool is_potentially_front(const StandardizedHistory& h, const std::vector<bool>& alive,
                          std::int32_t v) {
  const auto& ops = h.history.ops;
  auto is_peekdeq = [](const Operation& op) {
    return op.method == Method::Peek || op.method == Method::Deq;
  };
  for (std::int32_t u = 1; u <= h.values.size(); ++u) {
    if (u == v || !alive[u]) continue;
    if (!(ops[h.per_value[v].add].t_inv < ops[h.per_value[u].add].t_res)) return false;
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (h.op_value[i] != v || !is_peekdeq(ops[i])) continue;
    for (std::size_t j = 0; j < ops.size(); ++j) {
      std::int32_t u = h.op_value[j];
      if (u == v || !alive[u] || !is_peekdeq(ops[j])) continue;
      if (!(ops[i].t_inv < ops[j].t_res)) return false;
    }
  }
  return true;
}

std::optional<std::int32_t> get_linp_queue_naive(const StandardizedHistory& h,
                                                 const std::vector<bool>& alive) {
  for (std::int32_t v = 1; v <= h.values.size(); ++v) {
    if (alive[v] && is_potentially_front(h, alive, v)) return v;
  }
  return std::nullopt;
}

CheckReport check_queue(const StandardizedHistory& h) {
  QueueChecker provider(h);
  CheckReport report = check_lin(provider, h.values);
  report.n_ops = h.history.ops.size();
  return report;
}

}  // namespace linmon
