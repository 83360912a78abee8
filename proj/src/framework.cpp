#include "linmon/framework.hpp"

#include <stdexcept>

namespace linmon {

std::string_view verdict_name(Verdict v) {
  return v == Verdict::Linearizable ? "linearizable" : "non_linearizable";
}

std::string_view stage_name(FailStage s) {
  switch (s) {
    case FailStage::Validation: return "validation";
    case FailStage::Standardization: return "standardization";
    case FailStage::Checker: return "checker";
  }
  return "?";
}

CheckReport check_lin(LinPProvider& provider, const ValueTable& values) {
  CheckReport report;
  std::int32_t remaining = values.size();
  std::vector<bool> alive(values.size() + 1, true);

  while (remaining > 0) {
    std::int32_t v = provider.next();
    if (v == kBottom) {
      report.verdict = Verdict::NonLinearizable;
      report.stage = FailStage::Checker;
      return report;
    }
    if (v < 1 || v > values.size() || !alive[v]) {
      throw std::logic_error("provider protocol violation: value " + std::to_string(v) +
                             " is not in the residual history");
    }
    alive[v] = false;
    --remaining;
    report.removal_order.push_back(values.value_of(v).id);
    provider.notify_removed(v);
  }
  report.verdict = Verdict::Linearizable;
  report.stage = FailStage::Checker;
  return report;
}

}  // namespace linmon
