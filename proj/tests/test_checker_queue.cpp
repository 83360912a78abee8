#include <doctest.h>

#include "linmon/checker_queue.hpp"
#include "linmon/oracle.hpp"
#include "testutil.hpp"

using namespace linmon;
namespace tu = linmon::testutil;

namespace {

StandardizedHistory std_queue(const History& h) {
  auto r = standardize(h);
  REQUIRE(r.standardized.has_value());
  return std::move(*r.standardized);
}

}  // namespace

TEST_CASE("frontEnq iterator on the minimal-enq figure") {
  StandardizedHistory sh = std_queue(tu::fig_queue_minimal_enq());
  QueueChecker checker(sh);
  auto value_id = [&](std::int32_t v) { return sh.values.value_of(v).id; };

  // Invocation order 2, 3, 1; then the head is enq(1)'s live response.
  CHECK(value_id(checker.next_front_enq()) == 2);
  CHECK(value_id(checker.next_front_enq()) == 3);
  CHECK(value_id(checker.next_front_enq()) == 1);
  CHECK(checker.next_front_enq() == 0);
  CHECK(checker.next_front_enq() == 0);

  // Removing 1 skips its response but 2's response still blocks enq(4).
  checker.notify_removed(sh.values.dense_of(Value::of(1)));
  CHECK(checker.next_front_enq() == 0);
  checker.notify_removed(sh.values.dense_of(Value::of(2)));
  CHECK(value_id(checker.next_front_enq()) == 4);
  CHECK(checker.next_front_enq() == 0);
}

TEST_CASE("frontEnq blocks equal-time invocation on response ties") {
  // res(enq(1)) == inv(enq(2)) == 3: strict inv < res fails for value 2.
  History h = tu::make(AdtKind::Queue, {tu::op(1, "p1", Method::Enq, 1, 1, 3),
                                        tu::op(2, "p2", Method::Enq, 2, 3, 5)});
  StandardizedHistory sh = std_queue(h);
  QueueChecker checker(sh);
  CHECK(sh.values.value_of(checker.next_front_enq()).id == 1);
  CHECK(checker.next_front_enq() == 0);
  checker.notify_removed(sh.values.dense_of(Value::of(1)));
  CHECK(sh.values.value_of(checker.next_front_enq()).id == 2);
}

TEST_CASE("frontPeekDeq iterator on the potfront figure") {
  StandardizedHistory sh = std_queue(tu::fig_queue_potfront());
  QueueChecker checker(sh);
  CHECK(sh.values.value_of(checker.next_front_peekdeq()).id == 1);
  // Value 2's max invocation (10) is not below value 1's min response (7).
  CHECK(checker.next_front_peekdeq() == 0);
  checker.notify_removed(sh.values.dense_of(Value::of(1)));
  CHECK(sh.values.value_of(checker.next_front_peekdeq()).id == 2);
  CHECK(checker.next_front_peekdeq() == 0);
}

TEST_CASE("frontPeekDeq with interleaved windows returns both in some order") {
  // Each value's max invocation precedes the other's min response.
  History h = tu::make(AdtKind::Queue, {tu::op(1, "p1", Method::Enq, 1, 1, 2),
                                        tu::op(2, "p2", Method::Enq, 2, 1, 2),
                                        tu::op(3, "p1", Method::Deq, 1, 3, 10),
                                        tu::op(4, "p2", Method::Deq, 2, 4, 11)});
  StandardizedHistory sh = std_queue(h);
  CHECK(is_potentially_front(sh, {false, true, true}, 1));
  CHECK(is_potentially_front(sh, {false, true, true}, 2));
  QueueChecker checker(sh);
  std::int32_t a = checker.next_front_peekdeq();
  std::int32_t b = checker.next_front_peekdeq();
  CHECK(a != 0);
  CHECK(b != 0);
  CHECK(a != b);
}

TEST_CASE("get_linp_queue on fixtures") {
  StandardizedHistory fig = std_queue(tu::fig_queue_potfront());
  QueueChecker checker(fig);
  CHECK(fig.values.value_of(checker.next()).id == 1);

  StandardizedHistory hq = std_queue(tu::h_queue());
  QueueChecker hq_checker(hq);
  CHECK(hq.values.value_of(hq_checker.next()).id == 3);

  History fifo_violation = tu::make(AdtKind::Queue, {tu::op(1, "p1", Method::Enq, 1, 1, 2),
                                                     tu::op(2, "p1", Method::Enq, 2, 3, 4),
                                                     tu::op(3, "p1", Method::Deq, 2, 5, 6),
                                                     tu::op(4, "p1", Method::Deq, 1, 7, 8)});
  StandardizedHistory bad = std_queue(fifo_violation);
  QueueChecker bad_checker(bad);
  CHECK(bad_checker.next() == kBottom);
  CHECK(is_linearizable_bruteforce(fifo_violation) == OracleVerdict::False);
}

TEST_CASE("check_queue fixtures") {
  CheckReport fig = check_queue(std_queue(tu::fig_queue_potfront()));
  CHECK(fig.verdict == Verdict::Linearizable);
  CHECK(fig.removal_order == std::vector<std::int64_t>{1, 2});

  History fifo_violation = tu::make(AdtKind::Queue, {tu::op(1, "p1", Method::Enq, 1, 1, 2),
                                                     tu::op(2, "p1", Method::Enq, 2, 3, 4),
                                                     tu::op(3, "p1", Method::Deq, 2, 5, 6),
                                                     tu::op(4, "p1", Method::Deq, 1, 7, 8)});
  CHECK(check_queue(std_queue(fifo_violation)).verdict == Verdict::NonLinearizable);
}

TEST_CASE("optimized emissions satisfy the naive predicate; memberships are monotone") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    History h = tu::random_small_history(AdtKind::Queue, seed ^ 0xbbb, {.max_ops = 10, .max_values = 6, .allow_mutation = true});
    auto r = standardize(h);
    if (!r.standardized) continue;
    const StandardizedHistory& sh = *r.standardized;
    QueueChecker checker(sh);
    std::vector<bool> alive(sh.values.size() + 1, true);
    for (std::int32_t remaining = sh.values.size(); remaining > 0; --remaining) {
      std::int32_t v = checker.next();
      if (v == kBottom) {
        CHECK_FALSE(get_linp_queue_naive(sh, alive).has_value());
        break;
      }
      CHECK(is_potentially_front(sh, alive, v));
      alive[v] = false;
      checker.notify_removed(v);
    }
  }
}

TEST_CASE("differential: check_queue vs oracle") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    History h = tu::random_small_history(AdtKind::Queue, seed ^ 0xdead, {.max_ops = 8, .max_values = 4, .allow_mutation = true});
    auto want = is_linearizable_bruteforce(h);
    REQUIRE(want != OracleVerdict::BudgetExceeded);
    auto r = standardize(h);
    bool got =
        r.standardized.has_value() && check_queue(*r.standardized).verdict == Verdict::Linearizable;
    CHECK((want == OracleVerdict::True) == got);
  }
}
