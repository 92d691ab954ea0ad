#ifndef FDRES_ENGINE_HPP
#define FDRES_ENGINE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fdres/branching.hpp"
#include "fdres/path.hpp"
#include "fdres/policy.hpp"
#include "fdres/space.hpp"
#include "fdres/stats.hpp"

namespace fdres {

struct SearchOutcome {
    std::optional<Space> solution;
    SearchStats stats;
    StorageReport storage;
};

// All hooks optional; used by the trace interface and by lockstep tests.
struct SearchOptions {
    std::function<void(const std::string&)> trace;
    // restored parent space + target edge depth, fired right after restore
    std::function<void(const Space&, int)> on_restore;
    // fired at every failure, before adjust pops anything
    std::function<void(const Path&, const SearchStats&)> on_failure;
    // fired once, right before search_first returns
    std::function<void(const Path&, const SearchStats&)> on_done;
};

// Left-first depth-first search for the first solution. Takes an
// un-propagated model space; propagates it once, keeps a clone of the
// propagated root, and from then on interleaves propagate / branch / commit,
// delegating every state-restoration decision to the policy.
SearchOutcome search_first(Space root, RestorationPolicy& policy, Heuristic h = {},
                           const SearchOptions& opts = {});

// Rebuilds the post-propagation state of the top edge's parent node, firing
// the policy pointcuts around the default recomputation path. `failed` is
// the dead working space (consumed; the trailing policy resurrects it).
Space restore(const Path& path, RestorationPolicy& policy, Space failed);

// each variable's value; requires a solution space
std::vector<int> solution_assignment(const Space& s);

}  // namespace fdres

#endif
