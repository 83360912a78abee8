#include <doctest.h>

#include <map>

#include "linmon/oracle.hpp"
#include "linmon/seqspec.hpp"
#include "testutil.hpp"

using namespace linmon;
namespace tu = linmon::testutil;

TEST_CASE("oracle verdicts on the fixture histories") {
  CHECK(is_linearizable_bruteforce(tu::h_queue()) == OracleVerdict::True);
  CHECK(is_linearizable_bruteforce(tu::h2_register()) == OracleVerdict::False);
  History empty;
  CHECK(is_linearizable_bruteforce(empty) == OracleVerdict::True);

  History set_bad = tu::make(AdtKind::Set, {tu::op(1, "p1", Method::InsertOk, 1, 1, 2),
                                            tu::op(2, "p2", Method::DeleteFail, 1, 3, 4),
                                            tu::op(3, "p1", Method::DeleteOk, 1, 7, 8)});
  CHECK(is_linearizable_bruteforce(set_bad) == OracleVerdict::False);
}

TEST_CASE("find_linearization returns witnesses") {
  auto q = find_linearization(tu::h_queue());
  REQUIRE(q.verdict == OracleVerdict::True);
  CHECK(q.witness->op_ids == std::vector<std::int64_t>{1, 2});

  CHECK(find_linearization(tu::h2_register()).verdict == OracleVerdict::False);

  History single = tu::make(AdtKind::Stack, {tu::op(1, "p1", Method::Push, 1, 1, 2)});
  auto s = find_linearization(single);
  REQUIRE(s.verdict == OracleVerdict::True);
  CHECK(s.witness->op_ids == std::vector<std::int64_t>{1});
}

TEST_CASE("budget limits are reported, never mistaken for verdicts") {
  History big;
  big.adt = AdtKind::Stack;
  for (int i = 1; i <= 25; ++i) {
    big.ops.push_back(tu::op(i, "p" + std::to_string(i), Method::Push, i, 2 * i, 100 + i));
  }
  CHECK(is_linearizable_bruteforce(big) == OracleVerdict::BudgetExceeded);

  OracleBudget tight;
  tight.max_states = 1;
  History wide;
  wide.adt = AdtKind::Stack;
  for (int i = 1; i <= 10; ++i) {
    wide.ops.push_back(tu::op(i, "p" + std::to_string(i), Method::Push, i, 1, 100));
  }
  CHECK(is_linearizable_bruteforce(wide, tight) == OracleVerdict::BudgetExceeded);
}

namespace {

// Independent witness check: happens-before respected and spec membership.
void check_witness(const History& h, const Linearization& lin) {
  std::map<std::int64_t, const Operation*> by_id;
  for (const auto& op : h.ops) by_id[op.id] = &op;
  REQUIRE(lin.op_ids.size() == h.ops.size());
  std::vector<AbstractOp> seq;
  for (std::size_t i = 0; i < lin.op_ids.size(); ++i) {
    const Operation* oi = by_id.at(lin.op_ids[i]);
    seq.push_back(abstract_of(*oi));
    for (std::size_t j = i + 1; j < lin.op_ids.size(); ++j) {
      const Operation* oj = by_id.at(lin.op_ids[j]);
      CHECK(oi->t_inv < oj->t_res);  // j after i is impossible if oj ended first
    }
  }
  CHECK(is_member(h.adt, seq));
}

}  // namespace

TEST_CASE("witnesses satisfy happens-before and spec membership") {
  for (AdtKind adt : {AdtKind::Register, AdtKind::Set, AdtKind::Stack, AdtKind::Queue,
                      AdtKind::PriorityQueue}) {
    int witnesses = 0;
    for (std::uint64_t seed = 0; seed < 60 || witnesses < 20; ++seed) {
      REQUIRE(seed < 400);
      History h = tu::random_small_history(adt, seed ^ 0xabc, {.max_ops = 8, .max_values = 6, .allow_mutation = true});
      auto r = find_linearization(h);
      REQUIRE(r.verdict != OracleVerdict::BudgetExceeded);
      if (r.verdict == OracleVerdict::True) {
        check_witness(h, *r.witness);
        ++witnesses;
      }
    }
  }
}

TEST_CASE("linearizability is monotone under removing a value's operations") {
  for (AdtKind adt : {AdtKind::Set, AdtKind::Stack, AdtKind::Queue, AdtKind::PriorityQueue}) {
    int fresh = 0;
    for (std::uint64_t seed = 0; fresh < 25; ++seed) {
      REQUIRE(seed < 300);
      History h = tu::random_small_history(adt, seed ^ 0x77,
                                           {.max_ops = 8, .max_values = 5, .allow_mutation = false});
      if (is_linearizable_bruteforce(h) != OracleVerdict::True) continue;
      ++fresh;
      ValueTable values(h);
      for (std::int32_t v = 1; v <= values.size(); ++v) {
        History residual;
        residual.adt = h.adt;
        for (const auto& op : h.ops) {
          if (op.value != values.value_of(v)) residual.ops.push_back(op);
        }
        CHECK(is_linearizable_bruteforce(residual) == OracleVerdict::True);
      }
    }
  }
}

TEST_CASE("memoization keys include state: order-sensitive register history") {
  // Two overlapping writes and a read of the first-written value. Exploring
  // w1-then-w2 first must not poison the w2-then-w1 order.
  History h = tu::make(AdtKind::Register, {tu::op(1, "p1", Method::Write, 1, 0, 10),
                                           tu::op(2, "p2", Method::Write, 2, 0, 10),
                                           tu::op(3, "p3", Method::Read, 1, 20, 30)});
  CHECK(is_linearizable_bruteforce(h) == OracleVerdict::True);
}
