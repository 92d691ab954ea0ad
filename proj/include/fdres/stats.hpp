#ifndef FDRES_STATS_HPP
#define FDRES_STATS_HPP

#include <algorithm>
#include <optional>

namespace fdres {

// Search-tree statistics. Depths count edges on the path stack: the root is
// depth 0, a failed leaf's depth is the stack size when Failed is observed,
// a choice node's depth is the depth of the edge it pushes.
struct SearchStats {
    long long failures = 0;
    std::optional<int> first;     // depth of the chronologically first failure
    int peak = 0;                 // deepest event seen
    long long below_first = 0;    // failures at depth >= first
    long long above_first = 0;    // failures at depth <  first
    long long nodes = 0;          // choice nodes (one per pushed edge)
    long long solutions = 0;

    void record_failure(int depth);
    void record_fixpoint(int depth);
    void record_solution(int depth);

    bool operator==(const SearchStats&) const = default;
};

// Storage accounting in domain cells (one stored integer value). Counters
// are peaks of simultaneously-live stored data: the root copy, edge-held
// space copies, edge-held deltas and the trail.
struct StorageReport {
    long long copies_stored = 0;      // peak live edge copies (root copy excluded)
    long long delta_entries = 0;      // peak live delta entries
    long long trail_entries = 0;      // peak trail length
    long long peak_domain_cells = 0;  // peak live cells incl. root copy

    bool operator==(const StorageReport&) const = default;
};

// Running meter the engine samples after every event; peaks land in the
// StorageReport.
class StorageMeter {
public:
    explicit StorageMeter(long long root_copy_cells) : root_cells_(root_copy_cells) {}

    void sample(long long live_copies, long long live_copy_cells,
                long long live_delta_entries, long long live_delta_cells,
                long long trail_len) {
        report_.copies_stored = std::max(report_.copies_stored, live_copies);
        report_.delta_entries = std::max(report_.delta_entries, live_delta_entries);
        report_.trail_entries = std::max(report_.trail_entries, trail_len);
        const long long cells = root_cells_ + live_copy_cells + live_delta_cells + trail_len;
        report_.peak_domain_cells = std::max(report_.peak_domain_cells, cells);
    }

    const StorageReport& report() const { return report_; }

private:
    long long root_cells_;
    StorageReport report_;
};

}  // namespace fdres

#endif
