#ifndef FDRES_POLICY_HPP
#define FDRES_POLICY_HPP

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "fdres/path.hpp"
#include "fdres/space.hpp"
#include "fdres/stats.hpp"

namespace fdres {

// What the engine should store in the edge about to be pushed. Produced per
// node by the policy, executed by the engine: policies never write to edges
// themselves.
struct StoreNothing {};
struct StoreCopy {};
struct StoreDeltas {
    std::vector<VarId> vars;  // the modified set of the commit+propagate step
};
struct StoreTrailMark {
    std::size_t mark;
};
using StorageDirective = std::variant<StoreNothing, StoreCopy, StoreDeltas, StoreTrailMark>;

// Pluggable restoration behavior, hooked into the engine at three points:
// a storage decision per pushed edge, and the two pointcuts bracketing the
// default recomputation code inside restore. before_restore may fully
// satisfy a request (the default path is then skipped); after_recompute may
// refine a coarser restoration, e.g. apply a delta chain on top of a
// recomputed border state. Hooks must be deterministic given the path
// contents and the stats.
class RestorationPolicy {
public:
    virtual ~RestorationPolicy() = default;

    virtual const char* name() const = 0;

    // Called once per search, after the root has been propagated and the
    // root copy taken. `working` is the engine's single working space; the
    // trailing policy attaches its change listener here. `stats` is the
    // engine's statistics object, updated before every hook call.
    virtual void on_search_start(Space& working, const SearchStats& stats) {
        (void)working;
        (void)stats;
    }

    virtual StorageDirective on_fixpoint(int depth, const std::vector<VarId>& modified,
                                         const SearchStats& stats) = 0;

    // Pointcut before the default recomputation. `target_depth` is the top
    // edge's depth; the engine expects the post-propagation state of that
    // edge's parent node. `failed` is the dead working space; only the
    // trailing policy touches it (rolls it back in place and returns it).
    virtual std::optional<Space> before_restore(const Path& path, int target_depth,
                                                Space& failed) {
        (void)path;
        (void)target_depth;
        (void)failed;
        return std::nullopt;
    }

    // Pointcut after the recomputation segment; runs on every restore.
    virtual Space after_recompute(Space s, const Path& path, int target_depth) {
        (void)path;
        (void)target_depth;
        return s;
    }

    // reporting hooks
    virtual long long trail_entries() const { return 0; }
    virtual const char* last_restore_method() const { return "recompute"; }
    virtual int max_delta_chain() const { return 0; }
};

struct HybridConfig {
    int copy_distance = 8;
    bool keep_border_copy = true;
};

std::unique_ptr<RestorationPolicy> make_copying_policy();
// nullopt distance = unbounded: never store a copy, always replay from the root
std::unique_ptr<RestorationPolicy> make_recomputation_policy(std::optional<int> distance = std::nullopt);
std::unique_ptr<RestorationPolicy> make_trailing_policy();
std::unique_ptr<RestorationPolicy> make_recollection_policy(int copy_distance);
std::unique_ptr<RestorationPolicy> make_hybrid_policy(HybridConfig cfg = {});

}  // namespace fdres

#endif
