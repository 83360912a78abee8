#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Core data model: timed operations on a single ADT object, grouped into
// histories, plus the two text formats and the well-formedness and
// unambiguity validators everything downstream relies on.

namespace linmon {

enum class AdtKind { Register, Set, Stack, Queue, PriorityQueue };

enum class Method {
  // register
  Write,
  Read,
  // set
  InsertOk,
  InsertFail,
  DeleteOk,
  DeleteFail,
  ContainsTrue,
  ContainsFalse,
  // stack
  Push,
  Pop,
  // queue / priority-queue
  Enq,
  Deq,
  // stack / queue / priority-queue
  Peek,
  Empty,
};

using Time = std::int64_t;

/// Operation argument: a positive id, or the empty sentinel (id 0) which is
/// legal only with method Empty.
struct Value {
  std::int64_t id = 0;

  static constexpr Value empty() { return Value{0}; }
  static constexpr Value of(std::int64_t v) { return Value{v}; }
  constexpr bool is_empty() const { return id == 0; }
  friend constexpr bool operator==(Value a, Value b) { return a.id == b.id; }
  friend constexpr bool operator!=(Value a, Value b) { return a.id != b.id; }
  friend constexpr bool operator<(Value a, Value b) { return a.id < b.id; }
};

struct Operation {
  std::int64_t id = 0;
  std::string proc;
  Method method = Method::Empty;
  Value value;
  Time t_inv = 0;
  Time t_res = 0;

  friend bool operator==(const Operation&, const Operation&) = default;
};

/// A finite set of operations on one object of one ADT. Per-process
/// subhistories must be sequential; operation ids must be unique.
struct History {
  AdtKind adt = AdtKind::Register;
  std::vector<Operation> ops;

  friend bool operator==(const History&, const History&) = default;
};

std::string_view adt_name(AdtKind k);
std::optional<AdtKind> parse_adt(std::string_view s);

std::string_view method_name(Method m);
/// Methods legal for the given ADT, in canonical order.
const std::vector<Method>& methods_of(AdtKind k);
bool method_valid_for(AdtKind k, Method m);
std::optional<Method> parse_method(AdtKind k, std::string_view s);

bool is_add_method(AdtKind k, Method m);
bool is_remove_method(AdtKind k, Method m);
/// The unique dedicated add/remove method of the ADT (register has no remove).
Method add_method(AdtKind k);
std::optional<Method> remove_method(AdtKind k);

// ---------------------------------------------------------------------------
// Parsing and serialization
// ---------------------------------------------------------------------------

enum class HistoryFormat { Ops, Events };

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParseResult {
  History history;
  std::vector<std::string> warnings;  // e.g. invocations left unclosed at EOF
};

/// Parses one of the two text formats. In the `events` format timestamps are
/// the 1-based index of each event and a `res` line closes the pending
/// invocation of its process. A missing `adt` header is an error unless
/// `expected_adt` supplies the kind; a conflicting header is an error.
ParseResult parse_history(std::string_view text, HistoryFormat format,
                          std::optional<AdtKind> expected_adt = std::nullopt);

/// Inverse of parse_history. `ops` output is canonical (sorted by op id) and
/// round-trips bit-exactly; `events` output requires all 2n event times to be
/// distinct and round-trips order-isomorphically.
std::string serialize_history(const History& h, HistoryFormat format);

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// Empty result means well-formed: every window satisfies t_inv < t_res and
/// same-process windows are pairwise non-overlapping (closed intervals).
std::vector<std::string> validate_well_formed(const History& h);

/// Empty result means unambiguous: every value has exactly one add operation
/// and at most one remove operation. Returns the offending values otherwise.
std::vector<Value> validate_unambiguous(const History& h);

// ---------------------------------------------------------------------------
// Projections
// ---------------------------------------------------------------------------

History project_value(const History& h, Value v);
History project_methods(const History& h, const std::vector<Method>& ms);
History project_process(const History& h, std::string_view proc);

// ---------------------------------------------------------------------------
// Value table: dense 1..m indexing of the (non-empty) values of a history
// ---------------------------------------------------------------------------

/// Maps a history's original value ids to dense indices 1..m, assigned in
/// ascending id order so the dense order coincides with the total order on
/// values used by the priority-queue specification.
class ValueTable {
 public:
  ValueTable() = default;
  explicit ValueTable(const History& h);

  std::int32_t size() const { return static_cast<std::int32_t>(ids_.size()); }
  /// Dense index in 1..m, or 0 for the empty sentinel / unknown ids.
  std::int32_t dense_of(Value v) const;
  Value value_of(std::int32_t dense) const { return Value::of(ids_.at(dense - 1)); }

 private:
  std::vector<std::int64_t> ids_;  // sorted ascending
};

Time max_response_time(const History& h);

}  // namespace linmon
