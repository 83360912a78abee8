#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "linmon/generator.hpp"

// Scaling harness: generates per-size histories, times standardize+check
// only, emits CSV rows and a per-size summary with the log-linear fit ratio.

namespace linmon {

struct BenchPlan {
  AdtKind adt = AdtKind::Queue;
  std::vector<std::int64_t> sizes;  // ascending
  std::int32_t reps = 1;
  std::uint64_t seed = 0;
  std::int32_t n_procs = 40;  // 20 consumers and 20 producers style
  bool include_mutants = false;

  std::string validate() const;
};

struct BenchRow {
  AdtKind adt;
  std::int64_t size = 0;
  std::int32_t rep = 0;
  std::uint64_t seed = 0;
  std::string verdict;  // "linearizable" | "non_linearizable" | "error"
  std::int64_t elapsed_ns = 0;
  std::int64_t peak_ops_in_structures = 0;
};

struct BenchSizeSummary {
  std::int64_t size = 0;
  std::int64_t mean_ns = 0;
  std::int64_t median_ns = 0;
  std::int64_t max_ns = 0;
  double per_nlogn = 0.0;  // median / (n * log2 n)
};

struct BenchSummary {
  std::vector<BenchRow> rows;
  std::vector<BenchSizeSummary> per_size;
};

/// CSV schema: header `adt,size,rep,seed,verdict,elapsed_ns`, one row per
/// (size, rep). Timing covers standardize+check only, never parse or I/O.
BenchSummary run_bench(const BenchPlan& plan, std::ostream& csv);

std::string summary_json(const BenchPlan& plan, const BenchSummary& summary);

}  // namespace linmon
