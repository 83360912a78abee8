#include "linmon/seqspec.hpp"

#include <algorithm>

namespace linmon {

AdtState initial_state(AdtKind adt) {
  AdtState s;
  s.kind = adt;
  return s;
}

namespace {

std::optional<AdtState> step_register(const AdtState& s, const AbstractOp& a) {
  switch (a.method) {
    case Method::Write: {
      AdtState n = s;
      n.reg = a.value.id;
      return n;
    }
    case Method::Read:
      if (s.reg != 0 && s.reg == a.value.id) return s;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<AdtState> step_set(const AdtState& s, const AbstractOp& a) {
  auto pos = std::lower_bound(s.seq.begin(), s.seq.end(), a.value.id);
  bool present = pos != s.seq.end() && *pos == a.value.id;
  switch (a.method) {
    case Method::InsertOk: {
      if (present) return std::nullopt;
      AdtState n = s;
      n.seq.insert(n.seq.begin() + (pos - s.seq.begin()), a.value.id);
      return n;
    }
    case Method::DeleteOk: {
      if (!present) return std::nullopt;
      AdtState n = s;
      n.seq.erase(n.seq.begin() + (pos - s.seq.begin()));
      return n;
    }
    // contains_true/contains_false have identical semantics to the fail ops.
    case Method::InsertFail:
    case Method::ContainsTrue:
      if (present) return s;
      return std::nullopt;
    case Method::DeleteFail:
    case Method::ContainsFalse:
      if (!present) return s;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<AdtState> step_stack(const AdtState& s, const AbstractOp& a) {
  switch (a.method) {
    case Method::Push: {
      AdtState n = s;
      n.seq.push_back(a.value.id);
      return n;
    }
    case Method::Pop: {
      if (s.seq.empty() || s.seq.back() != a.value.id) return std::nullopt;
      AdtState n = s;
      n.seq.pop_back();
      return n;
    }
    case Method::Peek:
      if (!s.seq.empty() && s.seq.back() == a.value.id) return s;
      return std::nullopt;
    case Method::Empty:
      if (s.seq.empty()) return s;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// Queue state per the LTS: enq prepends, deq and peek act on the tail, so the
// oldest live value sits at the end of the sequence.
std::optional<AdtState> step_queue(const AdtState& s, const AbstractOp& a) {
  switch (a.method) {
    case Method::Enq: {
      AdtState n = s;
      n.seq.insert(n.seq.begin(), a.value.id);
      return n;
    }
    case Method::Deq: {
      if (s.seq.empty() || s.seq.back() != a.value.id) return std::nullopt;
      AdtState n = s;
      n.seq.pop_back();
      return n;
    }
    case Method::Peek:
      if (!s.seq.empty() && s.seq.back() == a.value.id) return s;
      return std::nullopt;
    case Method::Empty:
      if (s.seq.empty()) return s;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// Priority-queue state is kept sorted ascending; the tail is the maximum.
std::optional<AdtState> step_pqueue(const AdtState& s, const AbstractOp& a) {
  switch (a.method) {
    case Method::Enq: {
      AdtState n = s;
      auto pos = std::lower_bound(n.seq.begin(), n.seq.end(), a.value.id);
      n.seq.insert(pos, a.value.id);
      return n;
    }
    case Method::Deq: {
      if (s.seq.empty() || s.seq.back() != a.value.id) return std::nullopt;
      AdtState n = s;
      n.seq.pop_back();
      return n;
    }
    case Method::Peek:
      if (!s.seq.empty() && s.seq.back() == a.value.id) return s;
      return std::nullopt;
    case Method::Empty:
      if (s.seq.empty()) return s;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<AdtState> step(const AdtState& s, const AbstractOp& a) {
  if (!method_valid_for(s.kind, a.method)) return std::nullopt;
  if (a.value.is_empty() != (a.method == Method::Empty)) return std::nullopt;
  switch (s.kind) {
    case AdtKind::Register: return step_register(s, a);
    case AdtKind::Set: return step_set(s, a);
    case AdtKind::Stack: return step_stack(s, a);
    case AdtKind::Queue: return step_queue(s, a);
    case AdtKind::PriorityQueue: return step_pqueue(s, a);
  }
  return std::nullopt;
}

bool is_member(AdtKind adt, const std::vector<AbstractOp>& seq) {
  AdtState s = initial_state(adt);
  for (const AbstractOp& a : seq) {
    auto next = step(s, a);
    if (!next) return false;
    s = std::move(*next);
  }
  return true;
}

std::vector<AbstractOp> project_abstract(const std::vector<AbstractOp>& seq,
                                         const std::vector<Value>& keep) {
  std::vector<AbstractOp> out;
  for (const AbstractOp& a : seq) {
    if (std::find(keep.begin(), keep.end(), a.value) != keep.end()) out.push_back(a);
  }
  return out;
}

}  // namespace linmon
