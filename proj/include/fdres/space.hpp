#ifndef FDRES_SPACE_HPP
#define FDRES_SPACE_HPP

#include <deque>
#include <functional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "fdres/domain.hpp"

namespace fdres {

using VarId = int;

enum class Status { Fixpoint, Solution, Failed };

// x + offset != y
struct NeqOffset {
    VarId x;
    VarId y;
    int offset;
};

// all (vars[i] + offsets[i]) pairwise distinct
struct AlldiffOffset {
    std::vector<VarId> vars;
    std::vector<int> offsets;
};

struct Propagator {
    std::variant<NeqOffset, AlldiffOffset> constraint;
    std::vector<VarId> vars() const;
};

struct PropagationResult {
    Status status;
    std::vector<VarId> modified;  // vars whose domain shrank during this call
};

// Raised when a model references a variable that does not exist.
struct ModelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when restoration machinery observes an impossible state; always a
// policy bug, never a user error.
struct InternalCorruptionError : std::logic_error {
    using std::logic_error::logic_error;
};

// One search-tree node's complete solver state: domains, posted propagators
// and the pending propagation queue. Spaces are self-contained values;
// clone() produces a deep copy sharing nothing mutable with the original.
class Space {
public:
    // called once per removed value, before the removal is applied
    using ChangeListener = std::function<void(VarId, int)>;

    Space() = default;
    Space(Space&&) noexcept = default;
    Space& operator=(Space&&) noexcept = default;
    Space(const Space&) = delete;
    Space& operator=(const Space&) = delete;

    VarId add_variable(int lo, int hi);
    void post(Propagator p);

    // Runs pending propagators to a fixpoint. A propagator that narrows a
    // variable re-schedules that variable's subscribers. Fail-fast: the
    // first emptied domain stops the run.
    PropagationResult propagate();

    Space clone() const;

    int num_variables() const { return static_cast<int>(domains_.size()); }
    const Domain& domain(VarId v) const { return domains_.at(static_cast<std::size_t>(v)); }
    const std::vector<Propagator>& propagators() const { return propagators_; }
    std::size_t pending_count() const { return pending_.size(); }
    bool failed() const { return failed_; }

    // Commit-side narrowing: both notify the listener, mark the space failed
    // on emptiness and schedule the variable's subscribers. Neither runs
    // propagation.
    void assign(VarId v, int value);
    void exclude(VarId v, int value);

    // The listener is attached to exactly one working space; clones never
    // inherit it.
    void set_change_listener(ChangeListener l) { listener_ = std::move(l); }
    void clear_failed() { failed_ = false; }

    // domain-cell accounting unit: one stored integer value
    long long total_domain_cells() const;

    // Trail rollback support; bypasses listener and scheduling.
    void unchecked_insert(VarId v, int value) { domains_[static_cast<std::size_t>(v)].insert(value); }

    // Restoration support: overwrite one domain with an ancestor-consistent
    // snapshot. No propagation, no notification.
    void overwrite_domain(VarId v, const Domain& snapshot);

private:
    void check_var(VarId v, const char* who) const;
    void schedule_subscribers(VarId v);
    void schedule(int prop_index);
    // removes `value` from v's domain; returns false when this empties it
    bool prune(VarId v, int value, std::vector<VarId>& modified, std::vector<char>& touched);
    bool run_propagator(int index, std::vector<VarId>& modified, std::vector<char>& touched);

    std::vector<Domain> domains_;
    std::vector<Propagator> propagators_;
    std::vector<std::vector<int>> subscribers_;  // var -> propagator indices
    std::deque<int> pending_;
    std::vector<char> queued_;
    bool failed_ = false;
    ChangeListener listener_;
};

// Per-node restoration record content: post-propagation snapshots of the
// variables one commit+propagate step modified.
struct DomainDelta {
    std::vector<std::pair<VarId, Domain>> entries;
    long long cells() const;
};

DomainDelta snapshot_domains(const Space& s, const std::vector<VarId>& vars);

// Overwrites each listed variable's domain with its snapshot. Every snapshot
// must be a subset of the corresponding current domain (ancestor relation);
// a violation indicates a broken policy and throws InternalCorruptionError.
void apply_delta(Space& s, const DomainDelta& d);

bool domains_equal(const Space& a, const Space& b);

}  // namespace fdres

#endif
