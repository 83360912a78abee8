#include "linmon/bench.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "linmon/check.hpp"

namespace linmon {

std::string BenchPlan::validate() const {
  if (sizes.empty()) return "at least one size is required";
  if (!std::is_sorted(sizes.begin(), sizes.end())) return "sizes must be ascending";
  for (auto s : sizes) {
    if (s < 1) return "sizes must be >= 1";
  }
  if (reps < 1) return "reps must be >= 1";
  if (n_procs < 1) return "n_procs must be >= 1";
  if (adt == AdtKind::Register) return "bench targets the standardized ADTs, not register";
  return {};
}

BenchSummary run_bench(const BenchPlan& plan, std::ostream& csv) {
  BenchSummary summary;
  csv << "adt,size,rep,seed,verdict,elapsed_ns\n";

  for (std::size_t si = 0; si < plan.sizes.size(); ++si) {
    std::int64_t size = plan.sizes[si];
    std::vector<std::int64_t> elapsed;

    for (std::int32_t rep = 0; rep < plan.reps; ++rep) {
      BenchRow row;
      row.adt = plan.adt;
      row.size = size;
      row.rep = rep;
      row.seed = plan.seed + 1000 * si + rep;

      GenConfig cfg;
      cfg.adt = plan.adt;
      cfg.n_ops = size;
      cfg.n_procs = plan.n_procs;
      cfg.seed = row.seed;
      if (plan.adt != AdtKind::Set) cfg.empty_ratio = 0.05;
      if (plan.adt == AdtKind::Set) cfg.fail_ratio = 0.2;

      try {
        History h = generate_linearizable(cfg);
        if (plan.include_mutants && (rep % 2 == 1)) {
          h = mutate(h, MutationKind::SwapRemoveValues, row.seed ^ 0x9e3779b97f4a7c15ull).history;
        }
        RunResult r = run_check(h);
        if (r.status != RunResult::Status::Ok) {
          row.verdict = "error";
        } else {
          row.verdict = std::string(verdict_name(r.report.verdict));
          row.elapsed_ns = r.report.elapsed.count();
          row.peak_ops_in_structures = static_cast<std::int64_t>(r.report.n_ops);
          elapsed.push_back(row.elapsed_ns);
        }
      } catch (const std::exception&) {
        row.verdict = "error";
      }

      csv << adt_name(row.adt) << ',' << row.size << ',' << row.rep << ',' << row.seed << ','
          << row.verdict << ',' << row.elapsed_ns << '\n';
      summary.rows.push_back(std::move(row));
    }

    if (!elapsed.empty()) {
      BenchSizeSummary s;
      s.size = size;
      std::sort(elapsed.begin(), elapsed.end());
      s.median_ns = elapsed[elapsed.size() / 2];
      s.max_ns = elapsed.back();
      std::int64_t sum = 0;
      for (auto e : elapsed) sum += e;
      s.mean_ns = sum / static_cast<std::int64_t>(elapsed.size());
      s.per_nlogn = static_cast<double>(s.median_ns) /
                    (static_cast<double>(size) * std::log2(static_cast<double>(size)));
      summary.per_size.push_back(s);
    }
  }
  return summary;
}

std::string summary_json(const BenchPlan& plan, const BenchSummary& summary) {
  nlohmann::json j;
  j["schema"] = 1;
  j["adt"] = std::string(adt_name(plan.adt));
  j["reps"] = plan.reps;
  j["seed"] = plan.seed;
  auto& sizes = j["sizes"] = nlohmann::json::array();
  for (const auto& s : summary.per_size) {
    sizes.push_back({{"size", s.size},
                     {"mean_ns", s.mean_ns},
                     {"median_ns", s.median_ns},
                     {"max_ns", s.max_ns},
                     {"median_ns_per_nlog2n", s.per_nlogn}});
  }
  return j.dump(2);
}

}  // namespace linmon
