#ifndef FDRES_PATH_HPP
#define FDRES_PATH_HPP

#include <optional>
#include <vector>

#include "fdres/branching.hpp"
#include "fdres/space.hpp"

namespace fdres {

// Per-node restoration record.
//
// Depth convention used throughout: the edge at stack position k (1-based)
// is the tree edge from node k-1 to node k, where node d is the
// post-propagation state after the first d committed alternatives. All
// optional storage an edge carries describes its ORIGIN node k-1:
//   copy       - clone of node k-1 (the state the choice was made from)
//   deltas     - snapshots at node k-1 of the variables modified by the
//                commit+propagate step that produced node k-1
//   trail_mark - trail position at node k-1, before this edge's commit
// Origin storage stays valid when the edge's own alternative flips: both
// alternatives share the parent, and edges below the top never flip.
struct Edge {
    Choice choice{};
    int alternative = 0;  // commit to the first alternative
    std::optional<Space> copy;
    std::optional<DomainDelta> deltas;
    std::optional<std::size_t> trail_mark;
};

// Stack of edges between the root and the current node, plus a clone of the
// propagated root. All restoration services operate on this structure.
class Path {
public:
    explicit Path(Space root_copy) : root_copy_(std::move(root_copy)) {}

    int depth() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }

    // 1-based: edge(k) is the edge at depth k
    const Edge& edge(int k) const { return edges_.at(static_cast<std::size_t>(k - 1)); }
    Edge& top() { return edges_.back(); }
    const Edge& top() const { return edges_.back(); }

    void push(Edge e);
    void pop();

    const Space& root_copy() const { return root_copy_; }

    // deepest copy-bearing edge depth <= target, 0 when only the root copy
    // is available
    int nearest_copy_at_or_above(int target) const;

    // live stored-data counters, maintained across push/pop
    long long live_copies() const { return live_copies_; }
    long long live_copy_cells() const { return live_copy_cells_; }
    long long live_delta_entries() const { return live_delta_entries_; }
    long long live_delta_cells() const { return live_delta_cells_; }

private:
    std::vector<Edge> edges_;
    Space root_copy_;
    long long live_copies_ = 0;
    long long live_copy_cells_ = 0;
    long long live_delta_entries_ = 0;
    long long live_delta_cells_ = 0;
};

// Pops every trailing edge whose alternative is already 1; if an edge
// remains, flips its alternative to 1 and reports true. False means the
// tree is exhausted.
bool adjust(Path& p);

// Full recount of the path's stored restoration data; cross-checks the
// incremental counters.
struct StorageSnapshot {
    long long copies = 0;
    long long copy_cells = 0;
    long long delta_entries = 0;
    long long delta_cells = 0;
};
StorageSnapshot account_storage(const Path& p);

// Reconstructs node `to_node` by cloning the nearest at-or-above stored copy
// (or the root copy) and replaying committed alternatives with propagation.
// Replays cannot fail: the replayed prefix consists of proven fixpoints.
Space recompute_node(const Path& p, int to_node);

// Commits edges [from_edge, to_edge] of the path onto `s`, propagating after
// each commit. Given s = node from_edge-1, yields node to_edge.
void replay_range(const Path& p, Space& s, int from_edge, int to_edge);

}  // namespace fdres

#endif
