#include "linmon/checker_stack.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace linmon {

StackChecker::StackChecker(const StandardizedHistory& h)
    : partitions_(h.history),
      partition_set_(partitions_.num_partitions()),
      critical_(h.values.size() + 1),
      waiting_(h.values.size() + 1),
      value_alive_(h.values.size() + 1, true) {
  // Critical interval of v: [min res, max inv] over all ops of v. Inverted
  // intervals block nothing and are skipped outright.
  std::vector<CriticalInterval> crit(h.values.size() + 1,
                                     CriticalInterval{std::numeric_limits<Time>::max(),
                                                      std::numeric_limits<Time>::min()});
  for (std::size_t i = 0; i < h.history.ops.size(); ++i) {
    const Operation& op = h.history.ops[i];
    CriticalInterval& c = crit[h.op_value[i]];
    c.lo = std::min(c.lo, op.t_res);
    c.hi = std::max(c.hi, op.t_inv);
  }
  for (std::int32_t v = 1; v <= h.values.size(); ++v) {
    critical_[v] = partitions_.blocked_range(crit[v]);
    if (!critical_[v].empty()) {
      partition_set_.update_range(critical_[v], 1, v);
    }
  }

  std::vector<OpIntervalTree::Entry> entries;
  entries.reserve(h.history.ops.size());
  for (std::size_t i = 0; i < h.history.ops.size(); ++i) {
    entries.push_back({partitions_.span_range(h.history.ops[i]), h.op_value[i]});
  }
  ops_ = OpIntervalTree(h.values.size(), entries);
}

StackChecker::Permissive StackChecker::get_permissive() {
  if (!pending_.empty()) {
    Permissive p{pending_.front(), OpIntervalTree::kAnyValue};
    pending_.pop_front();
    return p;
  }
  auto [pos, weight, tag] = partition_set_.query_min();
  partition_set_.disable_point(pos);
  if (weight == 0) return {pos, OpIntervalTree::kAnyValue};
  if (weight == 1) {
    // At weight 1 the tag is exactly the one covering value.
    std::int32_t v = static_cast<std::int32_t>(tag);
    waiting_[v].push_back(pos);
    return {pos, v};
  }
  return {};
}

void StackChecker::remove_subhistory(std::int32_t value) {
  if (!value_alive_[value]) throw std::logic_error("removing a dead value");
  value_alive_[value] = false;
  if (!critical_[value].empty()) {
    partition_set_.update_range(critical_[value], -1, -value);
  }
  for (std::int32_t p : waiting_[value]) pending_.push_back(p);
  waiting_[value].clear();
}

std::int32_t StackChecker::next() {
  while (ready_.empty()) {
    Permissive p = get_permissive();
    if (p.is_null()) break;
    for (std::int32_t op : ops_.search(p.partition, p.value_filter)) {
      ops_.remove(op);
      std::int32_t v = ops_.value_of(op);
      if (!ops_.contains(v)) {
        remove_subhistory(v);
        ready_.push_back(v);
      }
    }
  }
  if (ready_.empty()) return kBottom;
  std::int32_t v = ready_.front();
  ready_.pop_front();
  return v;
}

// ---------------------------------------------------------------------------
// Naive reference
// ---------------------------------------------------------------------------

namespace {

// Open sub-intervals of (lo, hi) remaining after removing the closed blocks;
// integer endpoints stand for dense rationals, so (a, b) is nonempty iff
// a < b.
bool has_free_point(Time lo, Time hi, const std::vector<std::pair<Time, Time>>& blocks) {
  std::vector<std::pair<Time, Time>> pieces{{lo, hi}};
  for (auto [block_lo, block_hi] : blocks) {
    std::vector<std::pair<Time, Time>> next;
    for (auto [a, b] : pieces) {
      if (block_hi <= a || b <= block_lo) {
        next.emplace_back(a, b);
        continue;
      }
      if (a < block_lo) next.emplace_back(a, block_lo);
      if (block_hi < b) next.emplace_back(block_hi, b);
    }
    pieces = std::move(next);
  }
  return std::any_of(pieces.begin(), pieces.end(), [](auto p) { return p.first < p.second; });
}

std::map<std::int64_t, std::pair<Time, Time>> critical_by_value(const History& h) {
  std::map<std::int64_t, std::pair<Time, Time>> crit;  // value id -> (min res, max inv)
  for (const auto& op : h.ops) {
    if (op.value.is_empty()) continue;
    auto [it, fresh] = crit.try_emplace(op.value.id, op.t_res, op.t_inv);
    if (!fresh) {
      it->second.first = std::min(it->second.first, op.t_res);
      it->second.second = std::max(it->second.second, op.t_inv);
    }
  }
  return crit;
}

}  // namespace

bool is_potentially_bottom(const History& h, Value v) {
  auto crit = critical_by_value(h);
  std::vector<std::pair<Time, Time>> blocks;
  for (const auto& [id, ci] : crit) {
    if (id != v.id && ci.first < ci.second) blocks.emplace_back(ci.first, ci.second);
  }
  for (const auto& op : h.ops) {
    if (op.value != v) continue;
    if (!has_free_point(op.t_inv, op.t_res, blocks)) return false;
  }
  return true;
}

std::optional<Value> get_linp_stack_naive(const History& h) {
  auto crit = critical_by_value(h);
  for (const auto& [id, ci] : crit) {
    if (is_potentially_bottom(h, Value::of(id))) return Value::of(id);
  }
  return std::nullopt;
}

CheckReport check_stack(const StandardizedHistory& h) {
  StackChecker provider(h);
  CheckReport report = check_lin(provider, h.values);
  report.n_ops = h.history.ops.size();
  return report;
}

}  // namespace linmon
