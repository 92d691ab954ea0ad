#include "fdres/path.hpp"

#include <algorithm>
#include <cassert>

namespace fdres {

void Path::push(Edge e) {
    if (e.copy) {
        ++live_copies_;
        live_copy_cells_ += e.copy->total_domain_cells();
    }
    if (e.deltas) {
        live_delta_entries_ += static_cast<long long>(e.deltas->entries.size());
        live_delta_cells_ += e.deltas->cells();
    }
    edges_.push_back(std::move(e));
}

void Path::pop() {
    assert(!edges_.empty());
    const Edge& e = edges_.back();
    if (e.copy) {
        --live_copies_;
        live_copy_cells_ -= e.copy->total_domain_cells();
    }
    if (e.deltas) {
        live_delta_entries_ -= static_cast<long long>(e.deltas->entries.size());
        live_delta_cells_ -= e.deltas->cells();
    }
    edges_.pop_back();
}

int Path::nearest_copy_at_or_above(int target) const {
    for (int k = target; k >= 1; --k)
        if (edge(k).copy)
            return k;
    return 0;
}

StorageSnapshot account_storage(const Path& p) {
    StorageSnapshot s;
    for (int k = 1; k <= p.depth(); ++k) {
        const Edge& e = p.edge(k);
        if (e.copy) {
            ++s.copies;
            s.copy_cells += e.copy->total_domain_cells();
        }
        if (e.deltas) {
            s.delta_entries += static_cast<long long>(e.deltas->entries.size());
            s.delta_cells += e.deltas->cells();
        }
    }
    return s;
}

bool adjust(Path& p) {
    while (!p.empty() && p.top().alternative == 1)
        p.pop();
    if (p.empty())
        return false;
    p.top().alternative = 1;
    return true;
}

void replay_range(const Path& p, Space& s, int from_edge, int to_edge) {
    for (int k = from_edge; k <= to_edge; ++k) {
        const Edge& e = p.edge(k);
        commit(s, e.choice, e.alternative);
        const PropagationResult r = s.propagate();
        if (r.status == Status::Failed)
            throw InternalCorruptionError("replay_range: replayed prefix failed");
    }
}

Space recompute_node(const Path& p, int to_node) {
    // A copy held by edge k is node k-1, so any copy-bearing edge up to
    // to_node+1 is a usable base.
    const int limit = std::min(to_node + 1, p.depth());
    const int c = limit >= 1 ? p.nearest_copy_at_or_above(limit) : 0;
    if (c >= 1) {
        Space s = p.edge(c).copy->clone();
        replay_range(p, s, c, to_node);
        return s;
    }
    Space s = p.root_copy().clone();
    replay_range(p, s, 1, to_node);
    return s;
}

}  // namespace fdres
