#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fdres/bench.hpp"

namespace {

int run_solve(const fdres::RunConfig& cfg, const std::string& json_path) {
    const fdres::BenchReport report = fdres::run_benchmark(cfg);

    std::cout << fdres::report_table(report);
    if (report.solution) {
        std::cout << "solution:";
        for (int v : *report.solution)
            std::cout << ' ' << v;
        std::cout << '\n';
    } else {
        std::cout << "no solution\n";
    }
    const auto& st = report.storage;
    std::cout << "storage: copies=" << st.copies_stored
              << " delta_entries=" << st.delta_entries
              << " trail_entries=" << st.trail_entries
              << " peak_domain_cells=" << st.peak_domain_cells << '\n';
    std::cout << "time: " << report.time_ms_mean << " ms (mean of "
              << cfg.repetitions << ")\n";

    if (!json_path.empty()) {
        const auto j = fdres::report_json(report);
        if (json_path == "-") {
            std::cout << j.dump(2) << '\n';
        } else {
            std::ofstream out(json_path);
            if (!out)
                throw fdres::UsageError("cannot open json output file '" + json_path + "'");
            out << j.dump(2) << '\n';
        }
    }
    return report.solution ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-domain solver with pluggable state-restoration strategies"};
    app.require_subcommand(1);

    fdres::RunConfig cfg;
    std::string heuristic = "min-dom";
    std::string json_path;
    bool no_border_copy = false;
    int copy_distance = 0;

    CLI::App* solve = app.add_subcommand("solve", "solve a model and report search statistics");
    solve->add_option("--model", cfg.model.name, "model name: queens | queens-s")->required();
    solve->add_option("--n", cfg.model.n, "model size")->required();
    solve->add_option("--strategy", cfg.strategy,
                      "restoration strategy: copying | recompute | trail | recollect | hybrid");
    solve->add_option("--copy-distance", copy_distance,
                      "edges between stored copies (recompute/recollect/hybrid)");
    solve->add_option("--heuristic", heuristic, "branching heuristic: min-dom | leftmost");
    solve->add_option("--reps", cfg.repetitions, "repetitions for wall-time averaging");
    solve->add_option("--json", json_path, "write the run report as JSON ('-' for stdout)");
    solve->add_option("--trace", cfg.trace_path, "write one line per engine event to this file");
    solve->add_flag("--no-border-copy", no_border_copy, "hybrid: skip the border state copy");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (solve->count("--copy-distance"))
            cfg.copy_distance = copy_distance;
        cfg.border_copy = !no_border_copy;
        cfg.heuristic = fdres::parse_heuristic(heuristic);
        return run_solve(cfg, json_path);
    } catch (const fdres::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
