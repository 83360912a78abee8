#pragma once

#include "linmon/framework.hpp"
#include "linmon/standardize.hpp"

// Direct one-pass priority-queue checker: values are visited in decreasing
// order, each value's peek/deq windows must contain a partition not covered
// by any larger value's critical interval, and the value's own interval is
// added only after its check. The decrease-and-conquer reference over the
// potentially-minimum predicate is kept for tests.

namespace linmon {

/// Potentially-minimum predicate on a residual described by an alive mask:
/// v must be the smallest live value and each of its peek/deq ops must have
/// a point inside its window outside every other live value's critical
/// interval. Test-only reference.
bool is_potential_min(const StandardizedHistory& h, const std::vector<bool>& alive,
                      std::int32_t v);

CheckReport check_pqueue(const StandardizedHistory& h);

/// Framework loop over is_potential_min; removes the minimum live value per
/// round. Test-only reference.
CheckReport check_pqueue_naive(const StandardizedHistory& h);

}  // namespace linmon
