#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "linmon/model.hpp"

// The generic decrease-and-conquer loop: repeatedly ask a provider for a
// linearizability-preserving value and remove its operations until the
// residual history is empty (linearizable) or the provider signals bottom
// (non-linearizable).

namespace linmon {

/// Sentinel returned by providers when no linearizability-preserving value
/// exists, i.e. the residual history is non-linearizable.
inline constexpr std::int32_t kBottom = 0;

/// Stateful supplier of linearizability-preserving values, as dense value
/// indices. Providers own their residual-history bookkeeping; the framework
/// only counts remaining values and validates the protocol.
class LinPProvider {
 public:
  virtual ~LinPProvider() = default;
  virtual std::int32_t next() = 0;
  /// Called after the framework removes a value. Providers that already
  /// self-maintain their state on emission may ignore it.
  virtual void notify_removed(std::int32_t /*value*/) {}
};

enum class Verdict { Linearizable, NonLinearizable };
enum class FailStage { Validation, Standardization, Checker };

struct CheckReport {
  Verdict verdict = Verdict::Linearizable;
  FailStage stage = FailStage::Checker;
  std::vector<std::int64_t> removal_order;  // original value ids; a certificate
  std::chrono::nanoseconds elapsed{0};
  std::size_t n_ops = 0;
};

std::string_view verdict_name(Verdict v);
std::string_view stage_name(FailStage s);

/// Runs the loop over all `values.size()` values. Throws std::logic_error on
/// a provider protocol violation (value not alive), which is distinct from
/// either verdict.
CheckReport check_lin(LinPProvider& provider, const ValueTable& values);

}  // namespace linmon
