#include "linmon/model.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace linmon {

std::string_view adt_name(AdtKind k) {
  switch (k) {
    case AdtKind::Register: return "register";
    case AdtKind::Set: return "set";
    case AdtKind::Stack: return "stack";
    case AdtKind::Queue: return "queue";
    case AdtKind::PriorityQueue: return "priority-queue";
  }
  return "?";
}

std::optional<AdtKind> parse_adt(std::string_view s) {
  if (s == "register") return AdtKind::Register;
  if (s == "set") return AdtKind::Set;
  if (s == "stack") return AdtKind::Stack;
  if (s == "queue") return AdtKind::Queue;
  if (s == "priority-queue" || s == "priority_queue") return AdtKind::PriorityQueue;
  return std::nullopt;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Write: return "write";
    case Method::Read: return "read";
    case Method::InsertOk: return "insert_ok";
    case Method::InsertFail: return "insert_fail";
    case Method::DeleteOk: return "delete_ok";
    case Method::DeleteFail: return "delete_fail";
    case Method::ContainsTrue: return "contains_true";
    case Method::ContainsFalse: return "contains_false";
    case Method::Push: return "push";
    case Method::Pop: return "pop";
    case Method::Enq: return "enq";
    case Method::Deq: return "deq";
    case Method::Peek: return "peek";
    case Method::Empty: return "empty";
  }
  return "?";
}

const std::vector<Method>& methods_of(AdtKind k) {
  static const std::vector<Method> reg = {Method::Write, Method::Read};
  static const std::vector<Method> set = {Method::InsertOk,   Method::InsertFail,
                                          Method::DeleteOk,   Method::DeleteFail,
                                          Method::ContainsTrue, Method::ContainsFalse};
  static const std::vector<Method> stack = {Method::Push, Method::Pop, Method::Peek,
                                            Method::Empty};
  static const std::vector<Method> queue = {Method::Enq, Method::Deq, Method::Peek,
                                            Method::Empty};
  switch (k) {
    case AdtKind::Register: return reg;
    case AdtKind::Set: return set;
    case AdtKind::Stack: return stack;
    case AdtKind::Queue:
    case AdtKind::PriorityQueue: return queue;
  }
  return reg;
}

bool method_valid_for(AdtKind k, Method m) {
  const auto& ms = methods_of(k);
  return std::find(ms.begin(), ms.end(), m) != ms.end();
}

std::optional<Method> parse_method(AdtKind k, std::string_view s) {
  for (Method m : methods_of(k)) {
    if (method_name(m) == s) return m;
  }
  return std::nullopt;
}

Method add_method(AdtKind k) {
  switch (k) {
    case AdtKind::Register: return Method::Write;
    case AdtKind::Set: return Method::InsertOk;
    case AdtKind::Stack: return Method::Push;
    case AdtKind::Queue:
    case AdtKind::PriorityQueue: return Method::Enq;
  }
  return Method::Write;
}

std::optional<Method> remove_method(AdtKind k) {
  switch (k) {
    case AdtKind::Register: return std::nullopt;
    case AdtKind::Set: return Method::DeleteOk;
    case AdtKind::Stack: return Method::Pop;
    case AdtKind::Queue:
    case AdtKind::PriorityQueue: return Method::Deq;
  }
  return std::nullopt;
}

bool is_add_method(AdtKind k, Method m) { return m == add_method(k); }

bool is_remove_method(AdtKind k, Method m) {
  auto r = remove_method(k);
  return r.has_value() && m == *r;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, int line, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(tok) + "'");
  }
  return v;
}

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;

  std::optional<std::string_view> next() {
    if (pos >= text.size()) return std::nullopt;
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    return line;
  }
};

// Parses the value token: '-' is the empty sentinel (Empty methods only).
Value parse_value_token(std::string_view tok, Method m, int line) {
  if (tok == "-") {
    if (m != Method::Empty) throw ParseError(line, "'-' value is only legal with method empty");
    return Value::empty();
  }
  std::int64_t id = parse_int(tok, line, "value");
  if (id < 1) throw ParseError(line, "value ids must be >= 1");
  if (m == Method::Empty) throw ParseError(line, "method empty takes no value (use '-')");
  return Value::of(id);
}

}  // namespace

ParseResult parse_history(std::string_view text, HistoryFormat format,
                          std::optional<AdtKind> expected_adt) {
  ParseResult result;
  LineReader reader{text};
  std::optional<AdtKind> adt;

  auto ensure_adt = [&](int line) -> AdtKind {
    if (!adt) {
      if (!expected_adt) throw ParseError(line, "missing 'adt <kind>' header and no --adt given");
      adt = expected_adt;
    }
    return *adt;
  };

  std::set<std::int64_t> seen_ids;
  // events format state
  struct Pending {
    Operation op;
    int line;
  };
  std::map<std::string, Pending, std::less<>> pending;  // per process
  std::int64_t next_event_time = 1;
  std::int64_t next_op_id = 1;

  while (auto maybe_line = reader.next()) {
    auto toks = split_tokens(*maybe_line);
    if (toks.empty() || toks[0].front() == '#') continue;
    int ln = reader.line_no;

    if (toks[0] == "adt") {
      if (toks.size() != 2) throw ParseError(ln, "expected 'adt <kind>'");
      auto k = parse_adt(toks[1]);
      if (!k) throw ParseError(ln, "unknown adt '" + std::string(toks[1]) + "'");
      if (adt) throw ParseError(ln, "duplicate adt header");
      if (expected_adt && *expected_adt != *k) {
        throw ParseError(ln, "adt header conflicts with requested adt");
      }
      adt = k;
      continue;
    }

    if (format == HistoryFormat::Ops) {
      if (toks[0] != "op") throw ParseError(ln, "expected 'op' line");
      if (toks.size() != 7) {
        throw ParseError(ln, "expected 'op <id> <proc> <method> <value|-> <t_inv> <t_res>'");
      }
      AdtKind k = ensure_adt(ln);
      Operation op;
      op.id = parse_int(toks[1], ln, "op id");
      if (op.id < 0) throw ParseError(ln, "op ids must be >= 0");
      if (!seen_ids.insert(op.id).second) {
        throw ParseError(ln, "duplicate op id " + std::to_string(op.id));
      }
      op.proc = std::string(toks[2]);
      auto m = parse_method(k, toks[3]);
      if (!m) {
        throw ParseError(ln, "unknown method '" + std::string(toks[3]) + "' for adt " +
                                 std::string(adt_name(k)));
      }
      op.method = *m;
      op.value = parse_value_token(toks[4], op.method, ln);
      op.t_inv = parse_int(toks[5], ln, "t_inv");
      op.t_res = parse_int(toks[6], ln, "t_res");
      result.history.ops.push_back(std::move(op));
    } else {
      AdtKind k = ensure_adt(ln);
      if (toks[0] == "inv") {
        if (toks.size() != 4) throw ParseError(ln, "expected 'inv <proc> <method> <value|->'");
        std::string proc(toks[1]);
        if (pending.count(proc)) {
          throw ParseError(ln, "process " + proc + " already has a pending invocation");
        }
        auto m = parse_method(k, toks[2]);
        if (!m) {
          throw ParseError(ln, "unknown method '" + std::string(toks[2]) + "' for adt " +
                                   std::string(adt_name(k)));
        }
        Operation op;
        op.id = next_op_id++;
        op.proc = proc;
        op.method = *m;
        op.value = parse_value_token(toks[3], op.method, ln);
        op.t_inv = next_event_time++;
        pending.emplace(std::move(proc), Pending{std::move(op), ln});
      } else if (toks[0] == "res") {
        if (toks.size() != 2) throw ParseError(ln, "expected 'res <proc>'");
        auto it = pending.find(std::string(toks[1]));
        if (it == pending.end()) {
          throw ParseError(ln, "res with no pending invocation for process " +
                                   std::string(toks[1]));
        }
        it->second.op.t_res = next_event_time++;
        result.history.ops.push_back(std::move(it->second.op));
        pending.erase(it);
      } else {
        throw ParseError(ln, "expected 'inv' or 'res' line");
      }
    }
  }

  for (auto& [proc, p] : pending) {
    result.warnings.push_back("line " + std::to_string(p.line) + ": invocation on process " +
                              proc + " never responded; operation dropped");
  }

  if (adt) {
    result.history.adt = *adt;
  } else if (expected_adt) {
    result.history.adt = *expected_adt;
  }
  // else: empty file with no header; the default-constructed kind stands.
  return result;
}

std::string serialize_history(const History& h, HistoryFormat format) {
  std::ostringstream out;
  out << "adt " << adt_name(h.adt) << "\n";
  if (format == HistoryFormat::Ops) {
    std::vector<const Operation*> sorted;
    sorted.reserve(h.ops.size());
    for (const auto& op : h.ops) sorted.push_back(&op);
    std::sort(sorted.begin(), sorted.end(),
              [](const Operation* a, const Operation* b) { return a->id < b->id; });
    for (const Operation* op : sorted) {
      out << "op " << op->id << ' ' << op->proc << ' ' << method_name(op->method) << ' ';
      if (op->value.is_empty()) {
        out << '-';
      } else {
        out << op->value.id;
      }
      out << ' ' << op->t_inv << ' ' << op->t_res << "\n";
    }
    return std::move(out).str();
  }

  struct Event {
    Time t;
    bool is_res;
    const Operation* op;
  };
  std::vector<Event> events;
  events.reserve(h.ops.size() * 2);
  for (const auto& op : h.ops) {
    events.push_back({op.t_inv, false, &op});
    events.push_back({op.t_res, true, &op});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.t < b.t; });
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].t == events[i - 1].t) {
      throw std::invalid_argument(
          "events format requires all event times to be distinct (duplicate time " +
          std::to_string(events[i].t) + ")");
    }
  }
  for (const Event& e : events) {
    if (e.is_res) {
      out << "res " << e.op->proc << "\n";
    } else {
      out << "inv " << e.op->proc << ' ' << method_name(e.op->method) << ' ';
      if (e.op->value.is_empty()) {
        out << '-';
      } else {
        out << e.op->value.id;
      }
      out << "\n";
    }
  }
  return std::move(out).str();
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

std::vector<std::string> validate_well_formed(const History& h) {
  std::vector<std::string> violations;
  for (const auto& op : h.ops) {
    if (op.t_inv >= op.t_res) {
      violations.push_back("op " + std::to_string(op.id) + ": t_inv " + std::to_string(op.t_inv) +
                           " >= t_res " + std::to_string(op.t_res));
    }
  }
  // Same-process windows must be pairwise disjoint as closed intervals.
  std::unordered_map<std::string_view, std::vector<const Operation*>> per_proc;
  for (const auto& op : h.ops) per_proc[op.proc].push_back(&op);
  for (auto& [proc, ops] : per_proc) {
    std::sort(ops.begin(), ops.end(), [](const Operation* a, const Operation* b) {
      return a->t_inv != b->t_inv ? a->t_inv < b->t_inv : a->t_res < b->t_res;
    });
    for (std::size_t i = 1; i < ops.size(); ++i) {
      if (ops[i]->t_inv <= ops[i - 1]->t_res) {
        violations.push_back("process " + std::string(proc) + ": ops " +
                             std::to_string(ops[i - 1]->id) + " and " +
                             std::to_string(ops[i]->id) + " overlap");
      }
    }
  }
  return violations;
}

std::vector<Value> validate_unambiguous(const History& h) {
  std::map<std::int64_t, std::pair<int, int>> counts;  // value id -> (adds, removes)
  for (const auto& op : h.ops) {
    if (op.value.is_empty()) continue;
    auto& c = counts[op.value.id];
    if (is_add_method(h.adt, op.method)) ++c.first;
    if (is_remove_method(h.adt, op.method)) ++c.second;
  }
  std::vector<Value> offending;
  for (const auto& [id, c] : counts) {
    if (c.first != 1 || c.second > 1) offending.push_back(Value::of(id));
  }
  return offending;
}

// ---------------------------------------------------------------------------
// Projections
// ---------------------------------------------------------------------------

History project_value(const History& h, Value v) {
  History out;
  out.adt = h.adt;
  for (const auto& op : h.ops) {
    if (op.value == v) out.ops.push_back(op);
  }
  return out;
}

History project_methods(const History& h, const std::vector<Method>& ms) {
  History out;
  out.adt = h.adt;
  for (const auto& op : h.ops) {
    if (std::find(ms.begin(), ms.end(), op.method) != ms.end()) out.ops.push_back(op);
  }
  return out;
}

History project_process(const History& h, std::string_view proc) {
  History out;
  out.adt = h.adt;
  for (const auto& op : h.ops) {
    if (op.proc == proc) out.ops.push_back(op);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Value table
// ---------------------------------------------------------------------------

ValueTable::ValueTable(const History& h) {
  ids_.reserve(h.ops.size());
  for (const auto& op : h.ops) {
    if (!op.value.is_empty()) ids_.push_back(op.value.id);
  }
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

std::int32_t ValueTable::dense_of(Value v) const {
  if (v.is_empty()) return 0;
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v.id);
  if (it == ids_.end() || *it != v.id) return 0;
  return static_cast<std::int32_t>(it - ids_.begin()) + 1;
}

Time max_response_time(const History& h) {
  Time t = 0;
  for (const auto& op : h.ops) t = std::max(t, op.t_res);
  return t;
}

}  // namespace linmon
