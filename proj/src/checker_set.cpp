#include "linmon/checker_set.hpp"

namespace linmon {

bool is_safe_value(const StandardizedHistory& h, std::int32_t value) {
  const ValueOps& vo = h.per_value[value];
  Time min_res = h.history.ops[vo.add].t_res;     // res(insert_ok)
  Time max_inv = h.history.ops[vo.remove].t_inv;  // inv(delete_ok)
  for (std::int32_t i : vo.others) {
    const Operation& op = h.history.ops[i];
    if (op.method != Method::DeleteFail) continue;
    if (op.t_inv < min_res || op.t_res > max_inv) continue;
    return false;
  }
  return true;
}

CheckReport check_set(const StandardizedHistory& h) {
  CheckReport report;
  report.n_ops = h.history.ops.size();

  // Single pass: violation iff some delete_fail has MinRes < inv and
  // res < MaxInv for its value.
  std::vector<Time> min_res(h.values.size() + 1), max_inv(h.values.size() + 1);
  for (std::int32_t v = 1; v <= h.values.size(); ++v) {
    min_res[v] = h.history.ops[h.per_value[v].add].t_res;
    max_inv[v] = h.history.ops[h.per_value[v].remove].t_inv;
  }
  for (std::size_t i = 0; i < h.history.ops.size(); ++i) {
    const Operation& op = h.history.ops[i];
    if (op.method != Method::DeleteFail) continue;
    std::int32_t v = h.op_value[i];
    // Violation is the negation of safety: the op can be scheduled neither
    // before the insert responds nor after the delete is invoked.
    if (min_res[v] <= op.t_inv && op.t_res <= max_inv[v]) {
      report.verdict = Verdict::NonLinearizable;
      report.stage = FailStage::Checker;
      return report;
    }
  }
  report.verdict = Verdict::Linearizable;
  report.stage = FailStage::Checker;
  report.removal_order.reserve(h.values.size());
  for (std::int32_t v = 1; v <= h.values.size(); ++v) {
    report.removal_order.push_back(h.values.value_of(v).id);
  }
  return report;
}

}  // namespace linmon
