#include "linmon/generator.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <set>

namespace linmon {

std::string GenConfig::validate() const {
  if (n_ops < 0) return "n_ops must be >= 0";
  if (n_procs < 1) return "n_procs must be >= 1";
  if (relax < 1) return "relax must be >= 1";
  auto ratio_ok = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (!ratio_ok(peek_ratio) || !ratio_ok(fail_ratio) || !ratio_ok(empty_ratio)) {
    return "ratios must be in [0, 1]";
  }
  if (fail_ratio > 0 && adt != AdtKind::Set) return "fail_ratio is only valid for set";
  if (empty_ratio > 0 && (adt == AdtKind::Set || adt == AdtKind::Register)) {
    return "empty_ratio must be zero for set and register";
  }
  return {};
}

namespace {

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::uint64_t next() { return engine(); }
  std::int64_t below(std::int64_t n) { return static_cast<std::int64_t>(next() % n); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(static_cast<std::int64_t>(xs.size()))];
  }
};

struct AbstractAction {
  Method method;
  Value value;
};

// Simulated sequential object, tracking exactly what the generator needs to
// emit legal actions.
struct SimState {
  AdtKind adt = AdtKind::Queue;
  std::int64_t next_value = 1;
  std::int64_t reg = 0;
  std::vector<std::int64_t> stack;
  std::deque<std::int64_t> queue;
  std::set<std::int64_t> pqueue;
  std::vector<std::int64_t> present;  // set contents
  std::vector<std::int64_t> retired;  // inserted then deleted
};

AbstractAction sim_step(SimState& s, Rng& rng, const GenConfig& cfg) {
  double roll = rng.unit();
  switch (s.adt) {
    case AdtKind::Register: {
      if (s.reg != 0 && roll < cfg.peek_ratio) return {Method::Read, Value::of(s.reg)};
      s.reg = s.next_value++;
      return {Method::Write, Value::of(s.reg)};
    }
    case AdtKind::Set: {
      if (roll < cfg.fail_ratio) {
        bool towards_present = rng.next() & 1;
        if (towards_present && !s.present.empty()) {
          std::int64_t v = rng.pick(s.present);
          return {(rng.next() & 1) ? Method::InsertFail : Method::ContainsTrue, Value::of(v)};
        }
        if (!s.retired.empty()) {
          std::int64_t v = rng.pick(s.retired);
          return {(rng.next() & 1) ? Method::DeleteFail : Method::ContainsFalse, Value::of(v)};
        }
        // fall through to an add/remove when no candidate exists
      }
      if (s.present.empty() || (rng.next() & 1)) {
        std::int64_t v = s.next_value++;
        s.present.push_back(v);
        return {Method::InsertOk, Value::of(v)};
      }
      std::int64_t idx = rng.below(static_cast<std::int64_t>(s.present.size()));
      std::int64_t v = s.present[idx];
      s.present.erase(s.present.begin() + idx);
      s.retired.push_back(v);
      return {Method::DeleteOk, Value::of(v)};
    }
    case AdtKind::Stack: {
      if (s.stack.empty()) {
        if (roll < cfg.empty_ratio) return {Method::Empty, Value::empty()};
        std::int64_t v = s.next_value++;
        s.stack.push_back(v);
        return {Method::Push, Value::of(v)};
      }
      if (roll < cfg.peek_ratio) return {Method::Peek, Value::of(s.stack.back())};
      if (rng.next() & 1) {
        std::int64_t v = s.next_value++;
        s.stack.push_back(v);
        return {Method::Push, Value::of(v)};
      }
      std::int64_t v = s.stack.back();
      s.stack.pop_back();
      return {Method::Pop, Value::of(v)};
    }
    case AdtKind::Queue: {
      if (s.queue.empty()) {
        if (roll < cfg.empty_ratio) return {Method::Empty, Value::empty()};
        std::int64_t v = s.next_value++;
        s.queue.push_back(v);
        return {Method::Enq, Value::of(v)};
      }
      if (roll < cfg.peek_ratio) return {Method::Peek, Value::of(s.queue.front())};
      if (rng.next() & 1) {
        std::int64_t v = s.next_value++;
        s.queue.push_back(v);
        return {Method::Enq, Value::of(v)};
      }
      std::int64_t v = s.queue.front();
      s.queue.pop_front();
      return {Method::Deq, Value::of(v)};
    }
    case AdtKind::PriorityQueue: {
      if (s.pqueue.empty()) {
        if (roll < cfg.empty_ratio) return {Method::Empty, Value::empty()};
        std::int64_t v = s.next_value++;
        s.pqueue.insert(v);
        return {Method::Enq, Value::of(v)};
      }
      if (roll < cfg.peek_ratio) return {Method::Peek, Value::of(*s.pqueue.rbegin())};
      if (rng.next() & 1) {
        std::int64_t v = s.next_value++;
        s.pqueue.insert(v);
        return {Method::Enq, Value::of(v)};
      }
      auto it = std::prev(s.pqueue.end());
      std::int64_t v = *it;
      s.pqueue.erase(it);
      return {Method::Deq, Value::of(v)};
    }
  }
  return {Method::Empty, Value::empty()};
}

}  // namespace

History generate_linearizable(const GenConfig& cfg) {
  if (auto err = cfg.validate(); !err.empty()) throw std::invalid_argument(err);

  History h;
  h.adt = cfg.adt;
  Rng rng(cfg.seed);
  SimState state;
  state.adt = cfg.adt;

  // Linearization points sit at 4*i; windows are expanded around them but
  // stay strictly between same-process neighbour points and strictly after
  // the previous same-process response, so the output is well-formed and the
  // points remain a witness linearization.
  const std::int64_t spacing = 4;
  const std::int64_t gap = spacing * cfg.n_procs;
  std::vector<Time> prev_res(cfg.n_procs, std::numeric_limits<Time>::min() / 2);

  for (std::int64_t i = 1; i <= cfg.n_ops; ++i) {
    AbstractAction action = sim_step(state, rng, cfg);
    std::int32_t proc = static_cast<std::int32_t>((i - 1) % cfg.n_procs);
    Time point = spacing * i;

    std::int64_t left_max = std::min<std::int64_t>(cfg.relax, gap - 1);
    std::int64_t right_max = std::min<std::int64_t>(cfg.relax, gap - 2);
    Time inv = point - (1 + rng.below(std::max<std::int64_t>(left_max, 1)));
    inv = std::max(inv, prev_res[proc] + 1);
    Time res = point + (1 + rng.below(std::max<std::int64_t>(right_max, 1)));

    Operation op;
    op.id = i;
    op.proc = "p" + std::to_string(proc + 1);
    op.method = action.method;
    op.value = action.value;
    op.t_inv = inv;
    op.t_res = res;
    prev_res[proc] = res;
    h.ops.push_back(std::move(op));
  }
  return h;
}

// ---------------------------------------------------------------------------
// Mutations
// ---------------------------------------------------------------------------

std::string_view mutation_name(MutationKind k) {
  switch (k) {
    case MutationKind::SwapRemoveValues: return "swap_remove_values";
    case MutationKind::ShrinkWindow: return "shrink_window";
    case MutationKind::ShiftWindow: return "shift_window";
    case MutationKind::DropAdd: return "drop_add";
  }
  return "?";
}

std::optional<MutationKind> parse_mutation(std::string_view s) {
  for (MutationKind k : {MutationKind::SwapRemoveValues, MutationKind::ShrinkWindow,
                         MutationKind::ShiftWindow, MutationKind::DropAdd}) {
    if (mutation_name(k) == s) return k;
  }
  return std::nullopt;
}

namespace {

MutationResult mutate_swap_removes(const History& h, Rng& rng) {
  std::vector<std::size_t> removes;
  for (std::size_t i = 0; i < h.ops.size(); ++i) {
    if (is_remove_method(h.adt, h.ops[i].method)) removes.push_back(i);
  }
  if (removes.size() < 2) return {h, false};
  std::size_t a = removes[rng.below(static_cast<std::int64_t>(removes.size()))];
  std::size_t b = removes[rng.below(static_cast<std::int64_t>(removes.size()))];
  if (a == b) b = removes[(std::find(removes.begin(), removes.end(), a) - removes.begin() + 1) %
                          removes.size()];
  MutationResult out{h, true};
  std::swap(out.history.ops[a].value, out.history.ops[b].value);
  return out;
}

MutationResult mutate_shrink(const History& h, Rng& rng) {
  std::vector<std::size_t> wide;
  for (std::size_t i = 0; i < h.ops.size(); ++i) {
    if (h.ops[i].t_res - h.ops[i].t_inv >= 2) wide.push_back(i);
  }
  if (wide.empty()) return {h, false};
  std::size_t i = wide[rng.below(static_cast<std::int64_t>(wide.size()))];
  MutationResult out{h, true};
  Operation& op = out.history.ops[i];
  Time width = op.t_res - op.t_inv;
  Time new_inv = op.t_inv + rng.below(width);          // keeps new_inv < t_res
  Time new_res = new_inv + 1 + rng.below(op.t_res - new_inv);
  op.t_inv = new_inv;
  op.t_res = new_res;
  return out;
}

MutationResult mutate_shift(const History& h, Rng& rng) {
  if (h.ops.empty()) return {h, false};
  std::size_t i = static_cast<std::size_t>(rng.below(static_cast<std::int64_t>(h.ops.size())));
  const Operation& target = h.ops[i];

  // Free slot between the same-process neighbours.
  Time lo = std::numeric_limits<Time>::min() / 4;
  Time hi = std::numeric_limits<Time>::max() / 4;
  for (const auto& op : h.ops) {
    if (op.proc != target.proc || op.id == target.id) continue;
    if (op.t_res < target.t_inv) lo = std::max(lo, op.t_res + 1);
    if (op.t_inv > target.t_res) hi = std::min(hi, op.t_inv - 1);
  }
  Time width = target.t_res - target.t_inv;
  // Bounded shift keeps the mutation local.
  lo = std::max(lo, target.t_inv - 16);
  hi = std::min(hi, target.t_res + 16);
  if (hi - lo < width) return {h, false};
  Time slots = hi - lo - width + 1;
  Time new_inv = lo + rng.below(slots);
  if (new_inv == target.t_inv) new_inv = lo + (new_inv - lo + 1) % slots;
  if (new_inv == target.t_inv) return {h, false};
  MutationResult out{h, true};
  out.history.ops[i].t_inv = new_inv;
  out.history.ops[i].t_res = new_inv + width;
  return out;
}

MutationResult mutate_drop_add(const History& h, Rng& rng) {
  std::vector<std::size_t> adds;
  for (std::size_t i = 0; i < h.ops.size(); ++i) {
    if (is_add_method(h.adt, h.ops[i].method)) adds.push_back(i);
  }
  if (adds.empty()) return {h, false};
  std::size_t i = adds[rng.below(static_cast<std::int64_t>(adds.size()))];
  MutationResult out{h, true};
  out.history.ops.erase(out.history.ops.begin() + i);
  return out;
}

}  // namespace

MutationResult mutate(const History& h, MutationKind kind, std::uint64_t seed) {
  Rng rng(seed);
  switch (kind) {
    case MutationKind::SwapRemoveValues: return mutate_swap_removes(h, rng);
    case MutationKind::ShrinkWindow: return mutate_shrink(h, rng);
    case MutationKind::ShiftWindow: return mutate_shift(h, rng);
    case MutationKind::DropAdd: return mutate_drop_add(h, rng);
  }
  return {h, false};
}

}  // namespace linmon
