#include "linmon/oracle.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "linmon/seqspec.hpp"

namespace linmon {

namespace {

struct SearchKey {
  std::uint32_t mask;
  AdtState state;

  bool operator==(const SearchKey& other) const {
    return mask == other.mask && state == other.state;
  }
};

struct SearchKeyHash {
  std::size_t operator()(const SearchKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(k.mask);
    mix(static_cast<std::uint64_t>(k.state.kind));
    mix(static_cast<std::uint64_t>(k.state.reg));
    for (std::int64_t v : k.state.seq) mix(static_cast<std::uint64_t>(v));
    return static_cast<std::size_t>(h);
  }
};

enum class DfsOutcome { Found, Exhausted, Budget };

struct Searcher {
  const std::vector<Operation>* ops;  // sorted ascending by invocation time
  std::uint64_t max_states;
  std::uint64_t states = 0;
  std::unordered_set<SearchKey, SearchKeyHash> failed;
  std::vector<int> order;  // indices into *ops, in linearization order

  DfsOutcome run(std::uint32_t done, const AdtState& state) {
    int n = static_cast<int>(ops->size());
    if (done == (n == 32 ? 0xffffffffu : (1u << n) - 1u)) return DfsOutcome::Found;

    SearchKey key{done, state};
    if (failed.count(key)) return DfsOutcome::Exhausted;
    if (++states > max_states) return DfsOutcome::Budget;

    Time min_res = std::numeric_limits<Time>::max();
    for (int i = 0; i < n; ++i) {
      if (!(done & (1u << i))) min_res = std::min(min_res, (*ops)[i].t_res);
    }
    // Candidates tried in ascending invocation order (the ops are pre-sorted).
    for (int i = 0; i < n; ++i) {
      if (done & (1u << i)) continue;
      const Operation& op = (*ops)[i];
      if (op.t_inv >= min_res) continue;
      auto next = step(state, abstract_of(op));
      if (!next) continue;
      order.push_back(i);
      DfsOutcome r = run(done | (1u << i), *next);
      if (r != DfsOutcome::Exhausted) return r;
      order.pop_back();
    }
    failed.insert(std::move(key));
    return DfsOutcome::Exhausted;
  }
};

FindResult search(const History& h, const OracleBudget& b) {
  FindResult out;
  if (static_cast<int>(h.ops.size()) > b.max_ops || h.ops.size() > 32) {
    out.verdict = OracleVerdict::BudgetExceeded;
    return out;
  }
  std::vector<Operation> sorted = h.ops;
  std::sort(sorted.begin(), sorted.end(), [](const Operation& a, const Operation& o) {
    return a.t_inv != o.t_inv ? a.t_inv < o.t_inv : a.id < o.id;
  });

  Searcher s{&sorted, b.max_states, 0, {}, {}};
  switch (s.run(0, initial_state(h.adt))) {
    case DfsOutcome::Found: {
      out.verdict = OracleVerdict::True;
      Linearization lin;
      lin.op_ids.reserve(s.order.size());
      for (int i : s.order) lin.op_ids.push_back(sorted[i].id);
      out.witness = std::move(lin);
      return out;
    }
    case DfsOutcome::Exhausted:
      out.verdict = OracleVerdict::False;
      return out;
    case DfsOutcome::Budget:
      out.verdict = OracleVerdict::BudgetExceeded;
      return out;
  }
  return out;
}

}  // namespace

OracleVerdict is_linearizable_bruteforce(const History& h, const OracleBudget& b) {
  return search(h, b).verdict;
}

FindResult find_linearization(const History& h, const OracleBudget& b) { return search(h, b); }

}  // namespace linmon
