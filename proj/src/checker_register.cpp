#include "linmon/checker_register.hpp"

#include <algorithm>

namespace linmon {

RegisterSummaries summarize_register(const History& h) {
  RegisterSummaries out;
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(h.ops.size()); ++i) {
    const Operation& op = h.ops[i];
    auto [it, fresh] = out.by_value.try_emplace(op.value.id);
    RegisterValueSummary& s = it->second;
    if (fresh) {
      s.value = op.value;
      s.min_res = op.t_res;
      s.max_inv = op.t_inv;
    } else {
      s.min_res = std::min(s.min_res, op.t_res);
      s.max_inv = std::max(s.max_inv, op.t_inv);
    }
    if (op.method == Method::Write) {
      s.write_op = i;
    } else {
      s.reads.push_back(i);
    }
  }
  for (auto& [id, s] : out.by_value) {
    s.forward = s.min_res < s.max_inv;
    if (s.forward) {
      s.ival_lo = s.min_res;
      s.ival_hi = s.max_inv;
    } else {
      s.ival_lo = s.max_inv;
      s.ival_hi = s.min_res;
    }
    if (s.write_op < 0 && !out.unwritten_read) out.unwritten_read = s.value;
  }
  return out;
}

namespace {

bool disjoint(const RegisterValueSummary& a, const RegisterValueSummary& b) {
  return a.ival_hi < b.ival_lo || b.ival_hi < a.ival_lo;
}

bool subset(const RegisterValueSummary& inner, const RegisterValueSummary& outer) {
  return outer.ival_lo <= inner.ival_lo && inner.ival_hi <= outer.ival_hi;
}

bool qualifies(const History& h, const RegisterSummaries& sums, const RegisterValueSummary& s) {
  if (s.write_op < 0) return false;
  // (1) every read of v responds after the write is invoked
  Time write_inv = h.ops[s.write_op].t_inv;
  for (std::int32_t r : s.reads) {
    if (!(write_inv < h.ops[r].t_res)) return false;
  }
  for (const auto& [id, other] : sums.by_value) {
    if (other.value == s.value) continue;
    if (s.forward) {
      // (2) forward: disjoint from every other forward interval; no backward
      // interval nested inside ours
      if (other.forward && !disjoint(s, other)) return false;
      if (!other.forward && subset(other, s)) return false;
    } else {
      // (3) backward: not nested inside any forward interval
      if (other.forward && subset(s, other)) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Value> get_linp_register(const History& h) {
  RegisterSummaries sums = summarize_register(h);
  for (const auto& [id, s] : sums.by_value) {
    if (qualifies(h, sums, s)) return s.value;
  }
  return std::nullopt;
}

RegisterProvider::RegisterProvider(const History& h, const ValueTable& values)
    : residual_(h), values_(&values) {}

std::int32_t RegisterProvider::next() {
  auto v = get_linp_register(residual_);
  if (!v) return kBottom;
  return values_->dense_of(*v);
}

void RegisterProvider::notify_removed(std::int32_t value) {
  Value v = values_->value_of(value);
  std::erase_if(residual_.ops, [v](const Operation& op) { return op.value == v; });
}

CheckReport check_register(const History& h) {
  ValueTable values(h);
  RegisterProvider provider(h, values);
  CheckReport report = check_lin(provider, values);
  report.n_ops = h.ops.size();
  return report;
}

}  // namespace linmon
