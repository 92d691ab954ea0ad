#include "fdres/policy.hpp"

#include <algorithm>
#include <stdexcept>

#include "fdres/trail.hpp"

namespace fdres {

namespace {

void check_distance(int d, const char* who) {
    if (d < 1)
        throw std::invalid_argument(std::string(who) + ": copy distance must be >= 1");
}

// Clones the nearest at-or-above stored copy and applies the intervening
// delta chain top-down. Shared by recollection and the hybrid's bottom part.
// Edge 1's delta describes the root copy itself and is never needed.
Space recollect(const Path& path, int from_copy, int target, int& chain_out) {
    Space s = from_copy >= 1 ? path.edge(from_copy).copy->clone()
                             : path.root_copy().clone();
    const int first = std::max(from_copy + 1, 2);
    chain_out = 0;
    for (int k = first; k <= target; ++k) {
        const Edge& e = path.edge(k);
        if (!e.deltas)
            throw InternalCorruptionError("recollect: missing delta on edge " + std::to_string(k));
        apply_delta(s, *e.deltas);
        ++chain_out;
    }
    return s;
}

class CopyingPolicy final : public RestorationPolicy {
public:
    const char* name() const override { return "copying"; }

    StorageDirective on_fixpoint(int, const std::vector<VarId>&, const SearchStats&) override {
        return StoreCopy{};
    }

    std::optional<Space> before_restore(const Path& path, int target_depth, Space&) override {
        const Edge& e = path.edge(target_depth);
        if (!e.copy)
            throw InternalCorruptionError("copying: edge without a copy");
        return e.copy->clone();
    }

    const char* last_restore_method() const override { return "copy"; }
};

class RecomputationPolicy final : public RestorationPolicy {
public:
    explicit RecomputationPolicy(std::optional<int> distance) : distance_(distance) {
        if (distance_)
            check_distance(*distance_, "recomputation");
    }

    const char* name() const override { return "recompute"; }

    StorageDirective on_fixpoint(int depth, const std::vector<VarId>&, const SearchStats&) override {
        if (distance_ && depth % *distance_ == 0)
            return StoreCopy{};
        return StoreNothing{};
    }

    // before_restore stays unsatisfied: the engine's default recomputation
    // path is exactly this policy's restore behavior.

private:
    std::optional<int> distance_;
};

class TrailingPolicy final : public RestorationPolicy {
public:
    const char* name() const override { return "trail"; }

    void on_search_start(Space& working, const SearchStats&) override {
        trail_ = Trail{};
        working.set_change_listener(
            [this](VarId v, int value) { trail_.record(v, value); });
    }

    StorageDirective on_fixpoint(int, const std::vector<VarId>&, const SearchStats&) override {
        return StoreTrailMark{trail_.mark()};
    }

    std::optional<Space> before_restore(const Path& path, int target_depth, Space& failed) override {
        const Edge& e = path.edge(target_depth);
        if (!e.trail_mark)
            throw InternalCorruptionError("trailing: edge without a trail mark");
        trail_.rollback_to(failed, *e.trail_mark);
        return std::move(failed);
    }

    long long trail_entries() const override { return static_cast<long long>(trail_.size()); }
    const char* last_restore_method() const override { return "trail"; }

private:
    Trail trail_;
};

class RecollectionPolicy final : public RestorationPolicy {
public:
    explicit RecollectionPolicy(int distance) : distance_(distance) {
        check_distance(distance, "recollection");
    }

    const char* name() const override { return "recollect"; }

    StorageDirective on_fixpoint(int depth, const std::vector<VarId>& modified,
                                 const SearchStats&) override {
        if (depth % distance_ == 0)
            return StoreCopy{};
        return StoreDeltas{modified};
    }

    std::optional<Space> before_restore(const Path& path, int target_depth, Space&) override {
        const int c = path.nearest_copy_at_or_above(target_depth);
        int chain = 0;
        Space s = recollect(path, c, target_depth, chain);
        max_chain_ = std::max(max_chain_, chain);
        return s;
    }

    const char* last_restore_method() const override { return "recollect"; }
    int max_delta_chain() const override { return max_chain_; }

private:
    int distance_;
    int max_chain_ = 0;
};

// The border-level policy. Above the chronologically first failure's depth
// (the border) only committed choices are kept; the fixpoint one level above
// the border keeps the border state copy; below the border, copies alternate
// with delta recording every copy_distance edges. Restoration picks
// recomputation above the border and recollection below it; when no copy is
// reachable below the border it recomputes the border state in the first
// pointcut and lets the second pointcut apply the remaining delta chain.
class HybridPolicy final : public RestorationPolicy {
public:
    explicit HybridPolicy(HybridConfig cfg) : cfg_(cfg) {
        check_distance(cfg.copy_distance, "hybrid");
    }

    const char* name() const override { return "hybrid"; }

    void on_search_start(Space&, const SearchStats& stats) override {
        stats_ = &stats;
        pending_chain_.reset();
        max_chain_ = 0;
        last_method_ = "recompute";
    }

    StorageDirective on_fixpoint(int depth, const std::vector<VarId>& modified,
                                 const SearchStats& stats) override {
        if (!stats.first)
            return StoreNothing{};  // border not discovered yet
        const int border = *stats.first;
        if (depth < border)
            return StoreNothing{};
        if (depth == border) {
            if (cfg_.keep_border_copy)
                return StoreCopy{};  // the border state copy
            return StoreNothing{};
        }
        if ((depth - border) % cfg_.copy_distance == 0)
            return StoreCopy{};
        return StoreDeltas{modified};
    }

    std::optional<Space> before_restore(const Path& path, int target_depth, Space&) override {
        if (!stats_ || !stats_->first)
            throw InternalCorruptionError("hybrid: restore before any failure");
        const int border = *stats_->first;
        if (target_depth <= border) {
            // Upper part: recomputation from the root copy; when the target
            // parent is the border state itself the default path finds the
            // border copy and replays nothing.
            last_method_ = "recompute";
            return std::nullopt;
        }
        const int c = path.nearest_copy_at_or_above(target_depth);
        if (c >= 1) {
            int chain = 0;
            Space s = recollect(path, c, target_depth, chain);
            max_chain_ = std::max(max_chain_, chain);
            last_method_ = "recollect";
            return s;
        }
        // No reachable copy below the border: recompute the border state now
        // and leave the delta chain to after_recompute.
        pending_chain_ = std::pair<int, int>{border + 1, target_depth};
        last_method_ = "recompute+recollect";
        return recompute_node(path, border - 1);
    }

    Space after_recompute(Space s, const Path& path, int) override {
        if (!pending_chain_)
            return s;
        const auto [from, to] = *pending_chain_;
        pending_chain_.reset();
        int chain = 0;
        for (int k = from; k <= to; ++k) {
            const Edge& e = path.edge(k);
            if (!e.deltas)
                throw InternalCorruptionError("hybrid: missing delta on edge " + std::to_string(k));
            apply_delta(s, *e.deltas);
            ++chain;
        }
        max_chain_ = std::max(max_chain_, chain);
        return s;
    }

    const char* last_restore_method() const override { return last_method_; }
    int max_delta_chain() const override { return max_chain_; }

private:
    HybridConfig cfg_;
    const SearchStats* stats_ = nullptr;
    std::optional<std::pair<int, int>> pending_chain_;
    int max_chain_ = 0;
    const char* last_method_ = "recompute";
};

}  // namespace

std::unique_ptr<RestorationPolicy> make_copying_policy() {
    return std::make_unique<CopyingPolicy>();
}

std::unique_ptr<RestorationPolicy> make_recomputation_policy(std::optional<int> distance) {
    return std::make_unique<RecomputationPolicy>(distance);
}

std::unique_ptr<RestorationPolicy> make_trailing_policy() {
    return std::make_unique<TrailingPolicy>();
}

std::unique_ptr<RestorationPolicy> make_recollection_policy(int copy_distance) {
    return std::make_unique<RecollectionPolicy>(copy_distance);
}

std::unique_ptr<RestorationPolicy> make_hybrid_policy(HybridConfig cfg) {
    return std::make_unique<HybridPolicy>(cfg);
}

}  // namespace fdres
