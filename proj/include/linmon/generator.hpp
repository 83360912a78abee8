#pragma once

#include <cstdint>
#include <string>

#include "linmon/model.hpp"

// Deterministic workload generator: linearizable unambiguous histories by
// construction (a sequential trace with relaxed windows), plus seeded
// mutation operators that produce candidate non-linearizable histories.

namespace linmon {

struct GenConfig {
  AdtKind adt = AdtKind::Queue;
  std::int64_t n_ops = 0;
  std::int32_t n_procs = 1;
  std::uint64_t seed = 0;
  double peek_ratio = 0.3;   // read ratio for registers
  double fail_ratio = 0.2;   // set only
  double empty_ratio = 0.1;  // stack/queue/priority-queue only
  std::int64_t relax = 8;    // max window expansion in ticks

  /// Empty string means valid.
  std::string validate() const;
};

/// Pure function of the config: the output is per-process sequential,
/// unambiguous (fresh counter values) and linearizable by construction (the
/// construction keeps a witness point strictly inside every window).
History generate_linearizable(const GenConfig& cfg);

enum class MutationKind { SwapRemoveValues, ShrinkWindow, ShiftWindow, DropAdd };

struct MutationResult {
  History history;
  bool changed = false;  // false: mutation inapplicable, input returned as is
};

/// Seeded mutation with unknown verdict. All kinds except DropAdd preserve
/// well-formedness and unambiguity; DropAdd deliberately orphans a value's
/// operations, so its output may be rejected by validation.
MutationResult mutate(const History& h, MutationKind kind, std::uint64_t seed);

std::string_view mutation_name(MutationKind k);
std::optional<MutationKind> parse_mutation(std::string_view s);

}  // namespace linmon
