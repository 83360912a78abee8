#include <doctest.h>

#include <algorithm>
#include <map>

#include "linmon/checker_stack.hpp"
#include "linmon/oracle.hpp"
#include "testutil.hpp"

using namespace linmon;
namespace tu = linmon::testutil;

namespace {

StandardizedHistory std_stack(const History& h) {
  auto r = standardize(h);
  REQUIRE(r.standardized.has_value());
  return std::move(*r.standardized);
}

// Reference partition enumeration of the potentially-bottom predicate, the
// second route next to the interval-subtraction one in the library.
bool pot_bottom_by_partitions(const History& h, Value v) {
  std::vector<Time> times;
  for (const auto& op : h.ops) {
    times.push_back(op.t_inv);
    times.push_back(op.t_res);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  std::map<std::int64_t, std::pair<Time, Time>> crit;
  for (const auto& op : h.ops) {
    if (op.value.is_empty()) continue;
    auto [it, fresh] = crit.try_emplace(op.value.id, op.t_res, op.t_inv);
    if (!fresh) {
      it->second.first = std::min(it->second.first, op.t_res);
      it->second.second = std::max(it->second.second, op.t_inv);
    }
  }
  for (const auto& op : h.ops) {
    if (op.value != v) continue;
    bool ok = false;
    // candidate partitions (times[i], times[i+1]) strictly inside the window
    for (std::size_t i = 0; i + 1 < times.size() && !ok; ++i) {
      if (op.t_inv > times[i] || times[i + 1] > op.t_res) continue;
      bool blocked = false;
      for (const auto& [id, ci] : crit) {
        if (id == v.id || ci.first >= ci.second) continue;
        if (ci.first <= times[i] && times[i + 1] <= ci.second) blocked = true;
      }
      ok = !blocked;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("figure: critical intervals and initial weights") {
  StandardizedHistory sh = std_stack(tu::fig_stack_potbot());
  StackChecker checker(sh);
  // Value 1's critical interval [4,15] is the only blocking one; the first
  // permissive partition is weight-0, outside it.
  auto p = checker.get_permissive();
  REQUIRE_FALSE(p.is_null());
  CHECK(p.value_filter == OpIntervalTree::kAnyValue);
}

TEST_CASE("figure: 1 is potentially bottom, 2 is not") {
  History h = tu::fig_stack_potbot();
  CHECK(is_potentially_bottom(h, Value::of(1)));
  CHECK_FALSE(is_potentially_bottom(h, Value::of(2)));
  CHECK_FALSE(is_potentially_bottom(h, Value::of(3)));
  CHECK(get_linp_stack_naive(h) == Value::of(1));

  // The optimized provider must also emit 1 first.
  StandardizedHistory sh = std_stack(h);
  StackChecker checker(sh);
  std::int32_t first = checker.next();
  CHECK(sh.values.value_of(first) == Value::of(1));
}

TEST_CASE("potentially-bottom against direct partition enumeration") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    History h = tu::random_small_history(AdtKind::Stack, seed, {.max_ops = 6, .max_values = 6, .allow_mutation = true});
    ValueTable values(h);
    for (std::int32_t v = 1; v <= values.size(); ++v) {
      Value vv = values.value_of(v);
      CHECK(is_potentially_bottom(h, vv) == pot_bottom_by_partitions(h, vv));
    }
  }
}

TEST_CASE("single-value and trivial cases") {
  History single = tu::make(AdtKind::Stack, {tu::op(1, "p1", Method::Push, 1, 1, 2)});
  CHECK(get_linp_stack_naive(single) == Value::of(1));

  // Inverted critical interval blocks nothing.
  History inv = tu::make(AdtKind::Stack, {tu::op(1, "p1", Method::Push, 1, 1, 4),
                                          tu::op(2, "p2", Method::Pop, 1, 2, 5)});
  CHECK(is_potentially_bottom(inv, Value::of(1)));
}

TEST_CASE("nested values certify once the outer value is removed") {
  History h = tu::make(AdtKind::Stack, {tu::op(1, "p1", Method::Push, 1, 1, 2),
                                        tu::op(2, "p2", Method::Push, 2, 3, 4),
                                        tu::op(3, "p2", Method::Pop, 2, 5, 6),
                                        tu::op(4, "p1", Method::Pop, 1, 7, 8)});
  StandardizedHistory sh = std_stack(h);
  StackChecker checker(sh);
  std::int32_t first = checker.next();
  std::int32_t second = checker.next();
  CHECK(sh.values.value_of(first) == Value::of(1));
  CHECK(sh.values.value_of(second) == Value::of(2));
  CHECK(checker.next() == kBottom);  // residual empty; provider has nothing left
}

TEST_CASE("weight-1 partitions certify their own value and recycle as pending") {
  // Value 1's critical interval covers the whole middle, so its peek can only
  // be certified through 1-permissive partitions; value 2's ops sit inside
  // that interval and are reached after 1 is removed, via recycled
  // partitions or newly unblocked ones.
  History h = tu::make(AdtKind::Stack, {tu::op(1, "p1", Method::Push, 1, 1, 2),
                                        tu::op(2, "p1", Method::Peek, 1, 40, 60),
                                        tu::op(3, "p1", Method::Pop, 1, 98, 99),
                                        tu::op(4, "p2", Method::Push, 2, 30, 70),
                                        tu::op(5, "p3", Method::Pop, 2, 31, 71)});
  StandardizedHistory sh = std_stack(h);
  CheckReport report = check_stack(sh);
  CHECK(report.verdict == Verdict::Linearizable);
  CHECK(report.removal_order == std::vector<std::int64_t>{1, 2});
  CHECK(is_linearizable_bruteforce(h) == OracleVerdict::True);
}

TEST_CASE("check_stack fixtures") {
  CHECK(check_stack(std_stack(tu::fig_stack_potbot())).verdict == Verdict::Linearizable);

  History lifo_violation = tu::make(AdtKind::Stack, {tu::op(1, "p1", Method::Push, 1, 1, 2),
                                                     tu::op(2, "p1", Method::Push, 2, 3, 4),
                                                     tu::op(3, "p1", Method::Pop, 1, 5, 6),
                                                     tu::op(4, "p1", Method::Pop, 2, 7, 8)});
  CHECK(is_linearizable_bruteforce(lifo_violation) == OracleVerdict::False);
  CHECK(check_stack(std_stack(lifo_violation)).verdict == Verdict::NonLinearizable);
}

TEST_CASE("optimized emissions satisfy the naive predicate on the residual") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    History h = tu::random_small_history(AdtKind::Stack, seed ^ 0xaaa, {.max_ops = 10, .max_values = 6, .allow_mutation = true});
    auto r = standardize(h);
    if (!r.standardized) continue;
    const StandardizedHistory& sh = *r.standardized;
    StackChecker checker(sh);
    History residual = sh.history;
    for (std::int32_t remaining = sh.values.size(); remaining > 0; --remaining) {
      std::int32_t v = checker.next();
      if (v == kBottom) {
        CHECK_FALSE(get_linp_stack_naive(residual).has_value());
        break;
      }
      Value vv = sh.values.value_of(v);
      CHECK(is_potentially_bottom(residual, vv));
      std::erase_if(residual.ops, [vv](const Operation& op) { return op.value == vv; });
    }
  }
}

TEST_CASE("differential: check_stack vs oracle") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    History h = tu::random_small_history(AdtKind::Stack, seed ^ 0xcafe, {.max_ops = 8, .max_values = 4, .allow_mutation = true});
    auto want = is_linearizable_bruteforce(h);
    REQUIRE(want != OracleVerdict::BudgetExceeded);
    auto r = standardize(h);
    bool got =
        r.standardized.has_value() && check_stack(*r.standardized).verdict == Verdict::Linearizable;
    CHECK((want == OracleVerdict::True) == got);
  }
}
