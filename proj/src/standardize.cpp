#include "linmon/standardize.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

namespace linmon {

namespace {

// touches(H, v): the operations that actually require v to be present. For
// sets this excludes delete_fail (and contains_false, already rewritten).
bool touches_value(AdtKind adt, Method m) {
  if (adt == AdtKind::Set) {
    return m != Method::DeleteFail && m != Method::ContainsFalse;
  }
  return m != Method::Empty;
}

struct ValueSlots {
  int add = -1;
  int remove = -1;
  std::vector<int> middles;  // touching ops other than add/remove
};

// Per dense value: add/remove/other touching op positions.
std::vector<ValueSlots> index_values(const History& h, const ValueTable& table) {
  std::vector<ValueSlots> slots(table.size() + 1);
  for (int i = 0; i < static_cast<int>(h.ops.size()); ++i) {
    const Operation& op = h.ops[i];
    if (op.value.is_empty()) continue;
    ValueSlots& s = slots[table.dense_of(op.value)];
    if (is_add_method(h.adt, op.method)) {
      s.add = i;
    } else if (is_remove_method(h.adt, op.method)) {
      s.remove = i;
    } else if (touches_value(h.adt, op.method)) {
      s.middles.push_back(i);
    }
  }
  return slots;
}

std::string synthetic_process_name(const History& h) {
  std::set<std::string_view> procs;
  for (const auto& op : h.ops) procs.insert(op.proc);
  std::string name = "$aux";
  while (procs.count(name)) name += '$';
  return name;
}

}  // namespace

History complete_matches(const History& h, std::vector<std::int64_t>* synthetic_ids) {
  History out = h;
  ValueTable table(h);
  auto slots = index_values(h, table);

  Method rm = remove_method(h.adt).value();
  Time t = max_response_time(h);
  std::int64_t next_id = 0;
  for (const auto& op : h.ops) next_id = std::max(next_id, op.id);
  std::string proc = synthetic_process_name(h);

  std::int64_t k = 0;
  for (std::int32_t v = 1; v <= table.size(); ++v) {
    if (slots[v].remove >= 0) continue;
    ++k;
    Operation op;
    op.id = ++next_id;
    op.proc = proc;
    op.method = rm;
    op.value = table.value_of(v);
    op.t_inv = t + 2 * k - 1;
    op.t_res = t + 2 * k;
    if (synthetic_ids) synthetic_ids->push_back(op.id);
    out.ops.push_back(std::move(op));
  }
  return out;
}

std::optional<History> enforce_compliance(const History& h) {
  History out = h;
  ValueTable table(h);
  auto slots = index_values(out, table);

  for (std::int32_t v = 1; v <= table.size(); ++v) {
    const ValueSlots& s = slots[v];
    assert(s.add >= 0 && s.remove >= 0);
    Operation& add = out.ops[s.add];
    Operation& rem = out.ops[s.remove];

    // Clamp every other toucher into the add/remove windows, then tighten the
    // add's response and the remove's invocation against the clamped windows.
    Time min_res = rem.t_res;
    Time max_inv = add.t_inv;
    for (int i : s.middles) {
      Operation& op = out.ops[i];
      op.t_inv = std::max(op.t_inv, add.t_inv);
      op.t_res = std::min(op.t_res, rem.t_res);
      if (op.t_inv >= op.t_res) return std::nullopt;
      min_res = std::min(min_res, op.t_res);
      max_inv = std::max(max_inv, op.t_inv);
    }
    add.t_res = std::min(add.t_res, min_res);
    rem.t_inv = std::max(rem.t_inv, max_inv);
    if (add.t_inv >= add.t_res || rem.t_inv >= rem.t_res) return std::nullopt;
  }
  return out;
}

std::vector<std::pair<Time, Time>> bad_zone(const History& h) {
  ValueTable table(h);
  auto slots = index_values(h, table);
  std::vector<std::pair<Time, Time>> intervals;
  for (std::int32_t v = 1; v <= table.size(); ++v) {
    const ValueSlots& s = slots[v];
    if (s.add < 0 || s.remove < 0) continue;
    Time lo = h.ops[s.add].t_res;
    Time hi = h.ops[s.remove].t_inv;
    if (lo <= hi) intervals.emplace_back(lo, hi);
  }
  std::sort(intervals.begin(), intervals.end());
  std::vector<std::pair<Time, Time>> merged;
  for (auto [lo, hi] : intervals) {
    if (!merged.empty() && lo <= merged.back().second) {
      merged.back().second = std::max(merged.back().second, hi);
    } else {
      merged.emplace_back(lo, hi);
    }
  }
  return merged;
}

std::optional<History> strip_empty(const History& h) {
  auto zones = bad_zone(h);
  auto contained = [&zones](Time a, Time b) {
    // [a, b] is inside the union iff it is inside one merged interval.
    auto it = std::upper_bound(zones.begin(), zones.end(), std::make_pair(a, std::numeric_limits<Time>::max()));
    if (it == zones.begin()) return false;
    --it;
    return it->first <= a && b <= it->second;
  };

  History out;
  out.adt = h.adt;
  for (const auto& op : h.ops) {
    if (op.method != Method::Empty) {
      out.ops.push_back(op);
      continue;
    }
    if (contained(op.t_inv, op.t_res)) return std::nullopt;
  }
  return out;
}

StandardizeResult standardize(const History& h) {
  History work = h;
  if (work.adt == AdtKind::Set) {
    for (auto& op : work.ops) {
      if (op.method == Method::ContainsTrue) op.method = Method::InsertFail;
      if (op.method == Method::ContainsFalse) op.method = Method::DeleteFail;
    }
  }

  StandardizeResult result;
  std::vector<std::int64_t> synthetic;
  work = complete_matches(work, &synthetic);

  auto compliant = enforce_compliance(work);
  if (!compliant) {
    result.failed_stage = StandardizeStage::Compliance;
    return result;
  }
  work = std::move(*compliant);

  if (work.adt != AdtKind::Set) {
    auto stripped = strip_empty(work);
    if (!stripped) {
      result.failed_stage = StandardizeStage::EmptyCheck;
      return result;
    }
    work = std::move(*stripped);
  }

  StandardizedHistory sh;
  sh.values = ValueTable(work);
  sh.op_value.reserve(work.ops.size());
  sh.per_value.assign(sh.values.size() + 1, ValueOps{});
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(work.ops.size()); ++i) {
    const Operation& op = work.ops[i];
    std::int32_t v = sh.values.dense_of(op.value);
    sh.op_value.push_back(v);
    ValueOps& vo = sh.per_value[v];
    if (is_add_method(work.adt, op.method)) {
      vo.add = i;
    } else if (is_remove_method(work.adt, op.method)) {
      vo.remove = i;
    } else {
      vo.others.push_back(i);
    }
  }
  sh.history = std::move(work);
  sh.synthetic_ids = std::move(synthetic);
  result.standardized = std::move(sh);
  return result;
}

bool is_well_matched(const History& h) {
  ValueTable table(h);
  auto slots = index_values(h, table);
  for (std::int32_t v = 1; v <= table.size(); ++v) {
    if (slots[v].add < 0 || slots[v].remove < 0) return false;
  }
  return true;
}

bool is_time_compliant(const History& h) {
  ValueTable table(h);
  auto slots = index_values(h, table);
  for (std::int32_t v = 1; v <= table.size(); ++v) {
    const ValueSlots& s = slots[v];
    if (s.add < 0 || s.remove < 0) return false;
    const Operation& add = h.ops[s.add];
    const Operation& rem = h.ops[s.remove];
    auto ok = [&](const Operation& op) {
      return add.t_inv <= op.t_inv && op.t_inv <= rem.t_inv && add.t_res <= op.t_res &&
             op.t_res <= rem.t_res;
    };
    if (!ok(add) || !ok(rem)) return false;
    for (int i : s.middles) {
      if (!ok(h.ops[i])) return false;
    }
  }
  return true;
}

bool is_empty_free(const History& h) {
  return std::none_of(h.ops.begin(), h.ops.end(),
                      [](const Operation& op) { return op.method == Method::Empty; });
}

}  // namespace linmon
