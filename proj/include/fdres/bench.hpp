#ifndef FDRES_BENCH_HPP
#define FDRES_BENCH_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdres/engine.hpp"
#include "fdres/models.hpp"
#include "fdres/policy.hpp"

namespace fdres {

struct RunConfig {
    ModelSpec model;
    std::string strategy = "copying";  // copying | recompute | trail | recollect | hybrid
    std::optional<int> copy_distance;  // recompute: omitted = unbounded; recollect/hybrid default 8
    bool border_copy = true;           // hybrid only
    Heuristic heuristic;
    int repetitions = 1;
    std::string trace_path;            // empty = no trace log
};

struct BenchReport {
    RunConfig config;
    std::optional<std::vector<int>> solution;
    SearchStats stats;
    StorageReport storage;
    double time_ms_mean = 0.0;
};

// Validates strategy name and parameters; throws UsageError on bad input.
std::unique_ptr<RestorationPolicy> make_policy(const RunConfig& cfg);

const char* heuristic_name(Heuristic h);
Heuristic parse_heuristic(const std::string& name);

// Runs the configured search `repetitions` times sequentially, checks the
// stats are identical on every repetition and averages wall time.
BenchReport run_benchmark(const RunConfig& cfg);

nlohmann::ordered_json report_json(const BenchReport& r, bool include_time = true);

// One aligned-text row of search-tree statistics:
// failures, first, peak, [1, first), [first, peak]
std::string report_table(const BenchReport& r);

}  // namespace fdres

#endif
