#include "fdres/bench.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fdres {

std::unique_ptr<RestorationPolicy> make_policy(const RunConfig& cfg) {
    const auto distance_or = [&](int fallback) {
        const int d = cfg.copy_distance.value_or(fallback);
        if (d < 1)
            throw UsageError("copy distance must be >= 1");
        return d;
    };
    if (cfg.strategy == "copying" || cfg.strategy == "trail") {
        if (cfg.copy_distance)
            throw UsageError("--copy-distance does not apply to strategy '" + cfg.strategy + "'");
        return cfg.strategy == "copying" ? make_copying_policy() : make_trailing_policy();
    }
    if (cfg.strategy == "recompute") {
        if (cfg.copy_distance && *cfg.copy_distance < 1)
            throw UsageError("copy distance must be >= 1");
        return make_recomputation_policy(cfg.copy_distance);
    }
    if (cfg.strategy == "recollect")
        return make_recollection_policy(distance_or(8));
    if (cfg.strategy == "hybrid")
        return make_hybrid_policy(HybridConfig{distance_or(8), cfg.border_copy});
    throw UsageError("unknown strategy '" + cfg.strategy + "'");
}

const char* heuristic_name(Heuristic h) {
    return h.var_rule == VarRule::Leftmost ? "leftmost" : "min-dom";
}

Heuristic parse_heuristic(const std::string& name) {
    if (name == "min-dom")
        return Heuristic{VarRule::MinDomainSize};
    if (name == "leftmost")
        return Heuristic{VarRule::Leftmost};
    throw UsageError("unknown heuristic '" + name + "' (expected min-dom or leftmost)");
}

BenchReport run_benchmark(const RunConfig& cfg) {
    if (cfg.repetitions < 1)
        throw UsageError("repetitions must be >= 1");

    BenchReport report;
    report.config = cfg;

    std::ofstream trace_file;
    SearchOptions opts;
    if (!cfg.trace_path.empty()) {
        trace_file.open(cfg.trace_path);
        if (!trace_file)
            throw UsageError("cannot open trace file '" + cfg.trace_path + "'");
        opts.trace = [&trace_file](const std::string& line) { trace_file << line << '\n'; };
    }

    double total_ms = 0.0;
    for (int rep = 0; rep < cfg.repetitions; ++rep) {
        // fresh model and fresh policy per repetition: a policy instance
        // belongs to exactly one engine run
        Space root = build_model(cfg.model);
        auto policy = make_policy(cfg);
        // only the first repetition writes the trace
        const SearchOptions& rep_opts = rep == 0 ? opts : SearchOptions{};

        const auto start = std::chrono::steady_clock::now();
        SearchOutcome outcome = search_first(std::move(root), *policy, cfg.heuristic, rep_opts);
        const auto stop = std::chrono::steady_clock::now();
        total_ms += std::chrono::duration<double, std::milli>(stop - start).count();

        if (rep == 0) {
            if (outcome.solution)
                report.solution = solution_assignment(*outcome.solution);
            report.stats = outcome.stats;
            report.storage = outcome.storage;
        } else if (outcome.stats != report.stats || outcome.storage != report.storage) {
            throw std::runtime_error("run_benchmark: repetition diverged; search is not deterministic");
        }
    }
    report.time_ms_mean = total_ms / cfg.repetitions;
    return report;
}

nlohmann::ordered_json report_json(const BenchReport& r, bool include_time) {
    nlohmann::ordered_json j;
    j["model"] = r.config.model.name;
    j["n"] = r.config.model.n;
    j["strategy"] = r.config.strategy;

    nlohmann::ordered_json params;
    params["heuristic"] = heuristic_name(r.config.heuristic);
    if (r.config.strategy == "recompute")
        params["copy_distance"] = r.config.copy_distance ? nlohmann::ordered_json(*r.config.copy_distance)
                                                         : nlohmann::ordered_json(nullptr);
    else if (r.config.strategy == "recollect" || r.config.strategy == "hybrid")
        params["copy_distance"] = r.config.copy_distance.value_or(8);
    if (r.config.strategy == "hybrid")
        params["border_copy"] = r.config.border_copy;
    params["repetitions"] = r.config.repetitions;
    j["params"] = params;

    nlohmann::ordered_json stats;
    stats["failures"] = r.stats.failures;
    stats["first"] = r.stats.first ? nlohmann::ordered_json(*r.stats.first)
                                   : nlohmann::ordered_json(nullptr);
    stats["peak"] = r.stats.peak;
    stats["above_first"] = r.stats.above_first;
    stats["below_first"] = r.stats.below_first;
    stats["nodes"] = r.stats.nodes;
    j["stats"] = stats;

    nlohmann::ordered_json storage;
    storage["copies_stored"] = r.storage.copies_stored;
    storage["delta_entries"] = r.storage.delta_entries;
    storage["trail_entries"] = r.storage.trail_entries;
    storage["peak_domain_cells"] = r.storage.peak_domain_cells;
    j["storage"] = storage;

    if (include_time)
        j["time_ms_mean"] = r.time_ms_mean;
    return j;
}

std::string report_table(const BenchReport& r) {
    std::ostringstream out;
    const std::string problem = r.config.model.name + "(" + std::to_string(r.config.model.n) + ")";
    const std::string first = r.stats.first ? std::to_string(*r.stats.first) : "-";
    out << "problem              failures     first      peak   [1,first)   [first,peak]\n";
    char row[160];
    std::snprintf(row, sizeof(row), "%-18s %10lld %9s %9d %11lld %14lld\n",
                  problem.c_str(), r.stats.failures, first.c_str(), r.stats.peak,
                  r.stats.above_first, r.stats.below_first);
    out << row;
    return out.str();
}

}  // namespace fdres
