#include "linmon/checker_pqueue.hpp"

#include <algorithm>
#include <limits>

#include "linmon/structures.hpp"

namespace linmon {

namespace {

bool is_peekdeq(const Operation& op) {
  return op.method == Method::Peek || op.method == Method::Deq;
}

std::vector<CriticalInterval> criticals(const StandardizedHistory& h) {
  std::vector<CriticalInterval> crit(h.values.size() + 1,
                                     CriticalInterval{std::numeric_limits<Time>::max(),
                                                      std::numeric_limits<Time>::min()});
  for (std::size_t i = 0; i < h.history.ops.size(); ++i) {
    const Operation& op = h.history.ops[i];
    CriticalInterval& c = crit[h.op_value[i]];
    c.lo = std::min(c.lo, op.t_res);
    c.hi = std::max(c.hi, op.t_inv);
  }
  return crit;
}

}  // namespace

CheckReport check_pqueue(const StandardizedHistory& h) {
  CheckReport report;
  report.n_ops = h.history.ops.size();

  PartitionIndex partitions(h.history);
  CoverSegTree cover(partitions.num_partitions());
  auto crit = criticals(h);

  // Per-value peek/deq op lists, visited in decreasing value order so the
  // tree holds exactly the critical intervals of larger values.
  std::vector<std::vector<std::int32_t>> peekdeq(h.values.size() + 1);
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(h.history.ops.size()); ++i) {
    if (is_peekdeq(h.history.ops[i])) peekdeq[h.op_value[i]].push_back(i);
  }

  for (std::int32_t v = h.values.size(); v >= 1; --v) {
    for (std::int32_t i : peekdeq[v]) {
      if (cover.min_in_range(partitions.span_range(h.history.ops[i])) > 0) {
        report.verdict = Verdict::NonLinearizable;
        report.stage = FailStage::Checker;
        return report;
      }
    }
    cover.add_range(partitions.blocked_range(crit[v]));
  }

  report.verdict = Verdict::Linearizable;
  report.stage = FailStage::Checker;
  for (std::int32_t v = 1; v <= h.values.size(); ++v) {
    report.removal_order.push_back(h.values.value_of(v).id);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Naive reference
// ---------------------------------------------------------------------------

namespace {

// Is there a rational point of (lo, hi) outside all blocking intervals?
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

}  // namespace

bool is_potential_min(const StandardizedHistory& h, const std::vector<bool>& alive,
                      std::int32_t v) {
  for (std::int32_t u = 1; u < v; ++u) {
    if (alive[u]) return false;  // v is not the smallest live value
  }
  auto crit = criticals(h);
  std::vector<std::pair<Time, Time>> blocks;
  for (std::int32_t u = 1; u <= h.values.size(); ++u) {
    if (u != v && alive[u] && crit[u].blocking()) blocks.emplace_back(crit[u].lo, crit[u].hi);
  }
  for (std::size_t i = 0; i < h.history.ops.size(); ++i) {
    if (h.op_value[i] != v || !is_peekdeq(h.history.ops[i])) continue;
    if (!has_free_point(h.history.ops[i].t_inv, h.history.ops[i].t_res, blocks)) return false;
  }
  return true;
}

CheckReport check_pqueue_naive(const StandardizedHistory& h) {
  CheckReport report;
  report.n_ops = h.history.ops.size();
  std::vector<bool> alive(h.values.size() + 1, true);
  for (std::int32_t v = 1; v <= h.values.size(); ++v) {
    if (!is_potential_min(h, alive, v)) {
      report.verdict = Verdict::NonLinearizable;
      report.stage = FailStage::Checker;
      return report;
    }
    alive[v] = false;
    report.removal_order.push_back(h.values.value_of(v).id);
  }
  report.verdict = Verdict::Linearizable;
  report.stage = FailStage::Checker;
  return report;
}

}  // namespace linmon
