#pragma once

#include <map>
#include <optional>

#include "linmon/framework.hpp"
#include "linmon/model.hpp"

// GetLinP for unambiguous register histories. Summaries are recomputed per
// framework iteration; the overall check is cubic, which the source lemma
// explicitly accepts for registers.

namespace linmon {

struct RegisterValueSummary {
  Value value;
  std::int32_t write_op = -1;        // position in the history's ops
  std::vector<std::int32_t> reads;   // positions of read ops
  Time min_res = 0;                  // over all ops of the value
  Time max_inv = 0;
  bool forward = false;              // min_res < max_inv; ties are backward
  Time ival_lo = 0, ival_hi = 0;     // forward: [min_res, max_inv]; else flipped
};

/// Per-value extrema and class over the (residual) history. A value with
/// reads but no write is reported via `unwritten_read` and has no summary.
struct RegisterSummaries {
  std::map<std::int64_t, RegisterValueSummary> by_value;
  std::optional<Value> unwritten_read;
};
RegisterSummaries summarize_register(const History& h);

/// Returns a value (original id) meeting all three lemma conditions on the
/// given residual history, or nullopt for bottom.
std::optional<Value> get_linp_register(const History& h);

class RegisterProvider final : public LinPProvider {
 public:
  RegisterProvider(const History& h, const ValueTable& values);
  std::int32_t next() override;
  void notify_removed(std::int32_t value) override;

 private:
  History residual_;
  const ValueTable* values_;
};

CheckReport check_register(const History& h);

}  // namespace linmon
