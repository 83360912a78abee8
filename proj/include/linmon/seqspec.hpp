#pragma once

#include <optional>
#include <vector>

#include "linmon/model.hpp"

// Executable sequential specifications for all five ADTs, given as labeled
// transition systems: an initial state, a single-step transition that either
// produces a successor state or rejects, and sequence membership.

namespace linmon {

struct AbstractOp {
  Method method = Method::Empty;
  Value value;

  friend bool operator==(const AbstractOp&, const AbstractOp&) = default;
};

/// LTS state. Register: the current value or uninitialized. Set: a finite set
/// of ids. Stack/queue: a sequence of ids. Priority queue: a sequence kept
/// sorted ascending; deq and peek act on its tail, i.e. on the maximum.
struct AdtState {
  AdtKind kind = AdtKind::Register;
  std::int64_t reg = 0;           // register cell; 0 = uninitialized
  std::vector<std::int64_t> seq;  // set contents (sorted) or sequence

  friend bool operator==(const AdtState&, const AdtState&) = default;
};

AdtState initial_state(AdtKind adt);

/// One LTS transition; nullopt when no rule applies (REJECT). REJECT is a
/// value, not an exception: membership checking is hot-path oracle code.
std::optional<AdtState> step(const AdtState& s, const AbstractOp& a);

bool is_member(AdtKind adt, const std::vector<AbstractOp>& seq);

/// Order-preserving filter keeping only operations whose value is in `keep`.
/// The empty sentinel is kept only if explicitly included.
std::vector<AbstractOp> project_abstract(const std::vector<AbstractOp>& seq,
                                         const std::vector<Value>& keep);

inline AbstractOp abstract_of(const Operation& op) { return {op.method, op.value}; }

}  // namespace linmon
