#include "linmon/check.hpp"

#include "linmon/checker_pqueue.hpp"
#include "linmon/checker_queue.hpp"
#include "linmon/checker_register.hpp"
#include "linmon/checker_set.hpp"
#include "linmon/checker_stack.hpp"
#include "linmon/standardize.hpp"

namespace linmon {

namespace {

CheckReport run_fast_path(const History& h, RunResult& result) {
  if (h.adt == AdtKind::Register) return check_register(h);

  StandardizeResult sr = standardize(h);
  if (!sr.standardized) {
    CheckReport report;
    report.verdict = Verdict::NonLinearizable;
    report.stage = FailStage::Standardization;
    report.n_ops = h.ops.size();
    result.diagnostics.push_back(
        sr.failed_stage == StandardizeStage::Compliance
            ? "standardization: an operation window collapsed under time compliance"
            : "standardization: an empty operation lies inside the certain-nonempty zone");
    return report;
  }
  switch (h.adt) {
    case AdtKind::Set: return check_set(*sr.standardized);
    case AdtKind::Stack: return check_stack(*sr.standardized);
    case AdtKind::Queue: return check_queue(*sr.standardized);
    case AdtKind::PriorityQueue: return check_pqueue(*sr.standardized);
    default: break;
  }
  return {};
}

}  // namespace

RunResult run_check(const History& h, const CheckSettings& settings) {
  RunResult result;

  auto violations = validate_well_formed(h);
  if (!violations.empty()) {
    result.status = RunResult::Status::InputError;
    for (auto& v : violations) result.diagnostics.push_back("well-formedness: " + v);
    return result;
  }
  auto offending = validate_unambiguous(h);
  if (!offending.empty()) {
    result.status = RunResult::Status::InputError;
    std::string msg = "ambiguous values:";
    for (Value v : offending) msg += " " + std::to_string(v.id);
    result.diagnostics.push_back(msg);
    return result;
  }

  auto start = std::chrono::steady_clock::now();
  if (settings.use_oracle) {
    OracleVerdict verdict = is_linearizable_bruteforce(h, settings.budget);
    if (verdict == OracleVerdict::BudgetExceeded) {
      result.status = RunResult::Status::OracleBudget;
      result.diagnostics.push_back("oracle budget exceeded");
      return result;
    }
    result.report.verdict =
        verdict == OracleVerdict::True ? Verdict::Linearizable : Verdict::NonLinearizable;
    result.report.stage = FailStage::Checker;
    result.report.n_ops = h.ops.size();
  } else {
    result.report = run_fast_path(h, result);
  }
  result.report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  result.report.n_ops = h.ops.size();
  return result;
}

}  // namespace linmon
