#include <doctest.h>

#include "linmon/check.hpp"
#include "linmon/checker_queue.hpp"
#include "linmon/checker_register.hpp"
#include "linmon/framework.hpp"
#include "linmon/standardize.hpp"
#include "testutil.hpp"

using namespace linmon;
namespace tu = linmon::testutil;

namespace {

struct ScriptedProvider final : LinPProvider {
  std::vector<std::int32_t> script;
  std::size_t pos = 0;
  std::int32_t next() override { return pos < script.size() ? script[pos++] : kBottom; }
};

}  // namespace

TEST_CASE("empty history is trivially linearizable") {
  History empty;
  empty.adt = AdtKind::Queue;
  auto r = standardize(empty);
  REQUIRE(r.standardized.has_value());
  CheckReport report = check_queue(*r.standardized);
  CHECK(report.verdict == Verdict::Linearizable);
  CHECK(report.removal_order.empty());
}

TEST_CASE("queue fixture removal order is [3]") {
  auto r = standardize(tu::h_queue());
  CheckReport report = check_queue(*r.standardized);
  CHECK(report.verdict == Verdict::Linearizable);
  CHECK(report.removal_order == std::vector<std::int64_t>{3});
}

TEST_CASE("register H2 is non-linearizable via the framework") {
  CheckReport report = check_register(tu::h2_register());
  CHECK(report.verdict == Verdict::NonLinearizable);
  CHECK(report.stage == FailStage::Checker);
}

TEST_CASE("provider protocol violations throw") {
  History h = tu::h_queue();
  ValueTable values(h);

  ScriptedProvider out_of_range;
  out_of_range.script = {5};
  CHECK_THROWS_AS(check_lin(out_of_range, values), std::logic_error);

  History two = tu::make(AdtKind::Queue, {tu::op(1, "p1", Method::Enq, 1, 1, 2),
                                          tu::op(2, "p1", Method::Enq, 2, 3, 4)});
  ValueTable two_values(two);
  ScriptedProvider twice;
  twice.script = {1, 1};
  CHECK_THROWS_AS(check_lin(twice, two_values), std::logic_error);
}

TEST_CASE("linearizable removal orders are valid certificates") {
  // Replaying the removal order keeps the oracle verdict true at every step.
  for (AdtKind adt : {AdtKind::Stack, AdtKind::Queue}) {
    int replayed = 0;
    for (std::uint64_t seed = 0; replayed < 15; ++seed) {
      REQUIRE(seed < 200);
      History h = tu::random_small_history(adt, seed ^ 0x99,
                                           {.max_ops = 7, .max_values = 4, .allow_mutation = false});
      RunResult rr = run_check(h);
      REQUIRE(rr.status == RunResult::Status::Ok);
      if (rr.report.verdict != Verdict::Linearizable) continue;
      ++replayed;
      History residual = h;
      for (std::int64_t id : rr.report.removal_order) {
        CHECK(is_linearizable_bruteforce(residual) == OracleVerdict::True);
        std::erase_if(residual.ops,
                      [id](const Operation& op) { return op.value == Value::of(id); });
      }
      // Only empty operations may remain once every value is removed.
      for (const auto& op : residual.ops) CHECK(op.value.is_empty());
    }
  }
}
