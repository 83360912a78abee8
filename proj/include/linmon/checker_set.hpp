#pragma once

#include "linmon/framework.hpp"
#include "linmon/standardize.hpp"

// Linear-time set checker: a standardized set history is linearizable iff
// every value is safe, and safety can be checked per value in one pass.

namespace linmon {

/// Safe value: every delete_fail of v is invoked before the insert_ok
/// responds or responds after the delete_ok is invoked (both strict).
bool is_safe_value(const StandardizedHistory& h, std::int32_t value);

CheckReport check_set(const StandardizedHistory& h);

}  // namespace linmon
