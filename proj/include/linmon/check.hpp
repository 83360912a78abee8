#pragma once

#include <string>
#include <vector>

#include "linmon/framework.hpp"
#include "linmon/model.hpp"
#include "linmon/oracle.hpp"

// Front door: validation, standardization (for non-register ADTs) and
// dispatch to the per-ADT checker or the brute-force oracle. Elapsed time is
// measured around standardize + check only.

namespace linmon {

struct CheckSettings {
  bool use_oracle = false;
  OracleBudget budget;
};

struct RunResult {
  enum class Status { Ok, InputError, OracleBudget };
  Status status = Status::Ok;
  CheckReport report;                     // meaningful when status == Ok
  std::vector<std::string> diagnostics;   // validation failures etc.
};

RunResult run_check(const History& h, const CheckSettings& settings = {});

}  // namespace linmon
