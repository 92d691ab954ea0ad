#include "fdres/engine.hpp"

#include <cassert>
#include <stdexcept>

namespace fdres {

namespace {

std::vector<VarId> merge_commit_var(VarId committed, std::vector<VarId> propagated) {
    std::vector<VarId> merged;
    merged.reserve(propagated.size() + 1);
    merged.push_back(committed);
    for (VarId v : propagated)
        if (v != committed)
            merged.push_back(v);
    return merged;
}

}  // namespace

Space restore(const Path& path, RestorationPolicy& policy, Space failed) {
    const int target = path.depth();
    std::optional<Space> advised = policy.before_restore(path, target, failed);
    Space s = advised ? std::move(*advised) : recompute_node(path, target - 1);
    return policy.after_recompute(std::move(s), path, target);
}

SearchOutcome search_first(Space root, RestorationPolicy& policy, Heuristic h,
                           const SearchOptions& opts) {
    SearchStats stats;

    PropagationResult pr = root.propagate();
    Path path(root.clone());
    StorageMeter meter(path.root_copy().total_domain_cells());
    policy.on_search_start(root, stats);

    Space cur = std::move(root);
    Status status = pr.status;
    std::vector<VarId> modified = std::move(pr.modified);

    const auto sample = [&] {
        meter.sample(path.live_copies(), path.live_copy_cells(),
                     path.live_delta_entries(), path.live_delta_cells(),
                     policy.trail_entries());
    };
    const auto trace = [&](const std::string& line) {
        if (opts.trace)
            opts.trace(line);
    };
    sample();

    while (true) {
        switch (status) {
        case Status::Solution: {
            stats.record_solution(path.depth());
            sample();
            if (opts.on_done)
                opts.on_done(path, stats);
            cur.set_change_listener(nullptr);
            return {std::move(cur), stats, meter.report()};
        }

        case Status::Failed: {
            stats.record_failure(path.depth());
            trace("failure d=" + std::to_string(path.depth()));
            sample();
            if (opts.on_failure)
                opts.on_failure(path, stats);
            if (!adjust(path)) {
                // the problem is not solvable
                if (opts.on_done)
                    opts.on_done(path, stats);
                return {std::nullopt, stats, meter.report()};
            }
            cur = restore(path, policy, std::move(cur));
            if (opts.on_restore)
                opts.on_restore(cur, path.depth());
            const Edge& top = path.top();
            assert(top.alternative == 1);
            trace("restore d=" + std::to_string(path.depth()) +
                  " var=" + std::to_string(top.choice.var) +
                  " val=" + std::to_string(top.choice.value) +
                  " alt=1 method=" + policy.last_restore_method());
            commit(cur, top.choice, top.alternative);
            PropagationResult r = cur.propagate();
            status = r.status;
            modified = merge_commit_var(top.choice.var, std::move(r.modified));
            break;
        }

        case Status::Fixpoint: {
            const Choice c = make_choice(cur, h);
            const int depth = path.depth() + 1;
            stats.record_fixpoint(depth);
            trace("fixpoint d=" + std::to_string(depth) +
                  " var=" + std::to_string(c.var) +
                  " val=" + std::to_string(c.value));
            StorageDirective directive = policy.on_fixpoint(depth, modified, stats);

            Edge e;
            e.choice = c;
            if (std::holds_alternative<StoreCopy>(directive)) {
                e.copy = cur.clone();
            } else if (auto* sd = std::get_if<StoreDeltas>(&directive)) {
                e.deltas = snapshot_domains(cur, sd->vars);
            } else if (auto* tm = std::get_if<StoreTrailMark>(&directive)) {
                e.trail_mark = tm->mark;
            }
            path.push(std::move(e));
            sample();

            commit(cur, c, 0);
            PropagationResult r = cur.propagate();
            status = r.status;
            modified = merge_commit_var(c.var, std::move(r.modified));
            break;
        }
        }
    }
}

std::vector<int> solution_assignment(const Space& s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(s.num_variables()));
    for (VarId v = 0; v < s.num_variables(); ++v) {
        const Domain& d = s.domain(v);
        if (!d.fixed())
            throw std::logic_error("solution_assignment: variable " + std::to_string(v) +
                                   " is not fixed");
        out.push_back(d.value());
    }
    return out;
}

}  // namespace fdres
