#pragma once

#include <random>
#include <string>

#include "linmon/generator.hpp"
#include "linmon/model.hpp"
#include "linmon/seqspec.hpp"
#include "linmon/standardize.hpp"

// Shared fixtures and deterministic random-history helpers for the unit and
// acceptance suites.

namespace linmon::testutil {

inline Operation op(std::int64_t id, std::string proc, Method m, std::int64_t value, Time inv,
                    Time res) {
  Operation o;
  o.id = id;
  o.proc = std::move(proc);
  o.method = m;
  o.value = value == 0 ? Value::empty() : Value::of(value);
  o.t_inv = inv;
  o.t_res = res;
  return o;
}

inline History make(AdtKind adt, std::vector<Operation> ops) {
  History h;
  h.adt = adt;
  h.ops = std::move(ops);
  return h;
}

// --- Histories and sequences lifted from the source figures -----------------

// Two-operation queue history: enq(3)[1,3] by p1, deq(3)[2,4] by p2.
inline History h_queue() {
  return make(AdtKind::Queue, {op(1, "p1", Method::Enq, 3, 1, 3),
                               op(2, "p2", Method::Deq, 3, 2, 4)});
}

// Non-linearizable register history H2.
inline History h2_register() {
  return make(AdtKind::Register, {op(1, "p1", Method::Write, 1, 1, 2),
                                  op(2, "p2", Method::Write, 2, 3, 4),
                                  op(3, "p3", Method::Read, 1, 5, 6),
                                  op(4, "p4", Method::Read, 2, 7, 8)});
}

// Unambiguous stack history with repeated peeks and an empty op.
inline History h_stack1() {
  return make(AdtKind::Stack, {op(1, "p1", Method::Push, 3, 1, 3),
                               op(2, "p2", Method::Pop, 3, 2, 4),
                               op(3, "p1", Method::Push, 42, 5, 6),
                               op(4, "p2", Method::Pop, 42, 5, 6),
                               op(5, "p3", Method::Peek, 3, 7, 8),
                               op(6, "p4", Method::Peek, 3, 1, 10),
                               op(7, "p5", Method::Empty, 0, 1, 10)});
}

// Ambiguous: value 3 pushed twice.
inline History h_stack2() {
  return make(AdtKind::Stack, {op(1, "p1", Method::Push, 3, 1, 3),
                               op(2, "p2", Method::Pop, 3, 2, 4),
                               op(3, "p1", Method::Push, 3, 5, 6),
                               op(4, "p2", Method::Pop, 3, 5, 6)});
}

// Stack figure: 1 is potentially bottom, 2 is not.
inline History fig_stack_potbot() {
  return make(AdtKind::Stack, {op(1, "p1", Method::Push, 1, 2, 4),
                               op(2, "p1", Method::Peek, 1, 7, 10),
                               op(3, "p1", Method::Pop, 1, 15, 17),
                               op(4, "p2", Method::Push, 2, 1, 6),
                               op(5, "p3", Method::Pop, 2, 5, 9),
                               op(6, "p2", Method::Push, 3, 11, 13),
                               op(7, "p3", Method::Pop, 3, 12, 14)});
}

// Queue figure: 1 is potentially front, 2 is not.
inline History fig_queue_potfront() {
  return make(AdtKind::Queue, {op(1, "p1", Method::Enq, 1, 2, 4),
                               op(2, "p1", Method::Peek, 1, 5, 7),
                               op(3, "p2", Method::Deq, 1, 6, 8),
                               op(4, "p2", Method::Enq, 2, 1, 3),
                               op(5, "p1", Method::Peek, 2, 9, 11),
                               op(6, "p2", Method::Deq, 2, 10, 12)});
}

// Queue figure: values 1, 2, 3 satisfy frontEnq; 4 does not.
inline History fig_queue_minimal_enq() {
  return make(AdtKind::Queue, {op(1, "p3", Method::Enq, 1, 3, 5),
                               op(2, "p2", Method::Enq, 2, 1, 6),
                               op(3, "p1", Method::Enq, 3, 2, 8),
                               op(4, "p4", Method::Enq, 4, 7, 8)});
}

// Priority-queue figure (times doubled so variants stay on integer ticks):
// order 1 <= 2 <= 3, value 1 is a potential minimum.
inline History fig_pq_potlow() {
  return make(AdtKind::PriorityQueue, {op(1, "p2", Method::Enq, 2, 2, 4),
                                       op(2, "p1", Method::Enq, 1, 6, 8),
                                       op(3, "p2", Method::Deq, 2, 10, 12),
                                       op(4, "p2", Method::Enq, 3, 14, 20),
                                       op(5, "p1", Method::Deq, 1, 16, 22),
                                       op(6, "p2", Method::Deq, 3, 24, 26)});
}

// The figure's negative variant: deq(1) invoked strictly after res(enq(3)).
inline History fig_pq_potlow_late_deq() {
  History h = fig_pq_potlow();
  h.ops[4].t_inv = 21;
  h.ops[4].t_res = 22;
  return h;
}

inline std::vector<AbstractOp> abs_seq(std::initializer_list<std::pair<Method, std::int64_t>> xs) {
  std::vector<AbstractOp> out;
  for (auto [m, v] : xs) out.push_back({m, v == 0 ? Value::empty() : Value::of(v)});
  return out;
}

// --- Deterministic random histories for differential suites ----------------

struct RandomHistoryOpts {
  int max_ops = 8;
  int max_values = 4;
  bool allow_mutation = true;
};

inline int count_values(const History& h) { return ValueTable(h).size(); }

/// Deterministic mix of generated-linearizable and mutated histories that
/// pass both validators.
inline History random_small_history(AdtKind adt, std::uint64_t seed,
                                    const RandomHistoryOpts& opts = {}) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
  while (true) {
    GenConfig cfg;
    cfg.adt = adt;
    cfg.n_ops = 1 + static_cast<std::int64_t>(rng() % opts.max_ops);
    cfg.n_procs = 1 + static_cast<std::int32_t>(rng() % 3);
    cfg.seed = rng();
    cfg.relax = 1 + static_cast<std::int64_t>(rng() % 12);
    cfg.peek_ratio = adt == AdtKind::Set ? 0.0 : 0.35;
    cfg.fail_ratio = adt == AdtKind::Set ? 0.35 : 0.0;
    cfg.empty_ratio =
        (adt == AdtKind::Set || adt == AdtKind::Register) ? 0.0 : 0.15;
    History h = generate_linearizable(cfg);

    if (opts.allow_mutation && (rng() & 1)) {
      static constexpr MutationKind kKinds[] = {MutationKind::SwapRemoveValues,
                                                MutationKind::ShrinkWindow,
                                                MutationKind::ShiftWindow};
      h = mutate(h, kKinds[rng() % 3], rng()).history;
    }
    if (count_values(h) > opts.max_values) continue;
    if (!validate_well_formed(h).empty()) continue;
    if (!validate_unambiguous(h).empty()) continue;
    return h;
  }
}

}  // namespace linmon::testutil
