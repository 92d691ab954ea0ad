#include "fdres/space.hpp"

#include <algorithm>
#include <cassert>

namespace fdres {

std::vector<VarId> Propagator::vars() const {
    if (const auto* neq = std::get_if<NeqOffset>(&constraint))
        return {neq->x, neq->y};
    return std::get<AlldiffOffset>(constraint).vars;
}

VarId Space::add_variable(int lo, int hi) {
    domains_.emplace_back(lo, hi);
    subscribers_.emplace_back();
    return static_cast<VarId>(domains_.size() - 1);
}

void Space::check_var(VarId v, const char* who) const {
    if (v < 0 || v >= num_variables())
        throw ModelError(std::string(who) + ": unknown variable id " + std::to_string(v));
}

void Space::post(Propagator p) {
    if (const auto* ad = std::get_if<AlldiffOffset>(&p.constraint)) {
        if (ad->vars.size() != ad->offsets.size())
            throw ModelError("post: alldiff vars/offsets length mismatch");
    }
    for (VarId v : p.vars())
        check_var(v, "post");
    const int index = static_cast<int>(propagators_.size());
    for (VarId v : p.vars())
        subscribers_[static_cast<std::size_t>(v)].push_back(index);
    propagators_.push_back(std::move(p));
    queued_.push_back(0);
    schedule(index);
}

void Space::schedule(int prop_index) {
    if (!queued_[static_cast<std::size_t>(prop_index)]) {
        queued_[static_cast<std::size_t>(prop_index)] = 1;
        pending_.push_back(prop_index);
    }
}

void Space::schedule_subscribers(VarId v) {
    for (int p : subscribers_[static_cast<std::size_t>(v)])
        schedule(p);
}

bool Space::prune(VarId v, int value, std::vector<VarId>& modified, std::vector<char>& touched) {
    Domain& d = domains_[static_cast<std::size_t>(v)];
    if (!d.contains(value))
        return true;
    if (d.size() == 1) {
        failed_ = true;
        return false;
    }
    if (listener_)
        listener_(v, value);
    d.remove(value);
    if (!touched[static_cast<std::size_t>(v)]) {
        touched[static_cast<std::size_t>(v)] = 1;
        modified.push_back(v);
    }
    schedule_subscribers(v);
    return true;
}

bool Space::run_propagator(int index, std::vector<VarId>& modified, std::vector<char>& touched) {
    const Propagator& p = propagators_[static_cast<std::size_t>(index)];
    if (const auto* neq = std::get_if<NeqOffset>(&p.constraint)) {
        // value consistency: fire only once a side is fixed
        const Domain& dx = domain(neq->x);
        const Domain& dy = domain(neq->y);
        if (dx.fixed() && !prune(neq->y, dx.value() + neq->offset, modified, touched))
            return false;
        if (dy.fixed() && !prune(neq->x, dy.value() - neq->offset, modified, touched))
            return false;
        return true;
    }
    const auto& ad = std::get<AlldiffOffset>(p.constraint);
    const std::size_t k = ad.vars.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Domain& di = domain(ad.vars[i]);
        if (!di.fixed())
            continue;
        const int shifted = di.value() + ad.offsets[i];
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i)
                continue;
            if (!prune(ad.vars[j], shifted - ad.offsets[j], modified, touched))
                return false;
        }
    }
    return true;
}

PropagationResult Space::propagate() {
    std::vector<VarId> modified;
    std::vector<char> touched(static_cast<std::size_t>(num_variables()), 0);

    if (failed_) {
        pending_.clear();
        std::fill(queued_.begin(), queued_.end(), 0);
        return {Status::Failed, {}};
    }

    while (!pending_.empty()) {
        const int index = pending_.front();
        pending_.pop_front();
        queued_[static_cast<std::size_t>(index)] = 0;
        if (!run_propagator(index, modified, touched)) {
            pending_.clear();
            std::fill(queued_.begin(), queued_.end(), 0);
            return {Status::Failed, std::move(modified)};
        }
    }

    const bool all_fixed = std::all_of(domains_.begin(), domains_.end(),
                                       [](const Domain& d) { return d.fixed(); });
    return {all_fixed ? Status::Solution : Status::Fixpoint, std::move(modified)};
}

Space Space::clone() const {
    Space copy;
    copy.domains_ = domains_;
    copy.propagators_ = propagators_;
    copy.subscribers_ = subscribers_;
    copy.pending_ = pending_;
    copy.queued_ = queued_;
    copy.failed_ = failed_;
    // listener_ deliberately not copied
    return copy;
}

void Space::assign(VarId v, int value) {
    check_var(v, "assign");
    Domain& d = domains_[static_cast<std::size_t>(v)];
    if (!d.contains(value)) {
        failed_ = true;
        return;
    }
    bool changed = false;
    for (int u : d.values()) {
        if (u == value)
            continue;
        if (listener_)
            listener_(v, u);
        d.remove(u);
        changed = true;
    }
    if (changed)
        schedule_subscribers(v);
}

void Space::exclude(VarId v, int value) {
    check_var(v, "exclude");
    Domain& d = domains_[static_cast<std::size_t>(v)];
    if (!d.contains(value))
        return;
    if (d.size() == 1) {
        failed_ = true;
        return;
    }
    if (listener_)
        listener_(v, value);
    d.remove(value);
    schedule_subscribers(v);
}

long long Space::total_domain_cells() const {
    long long cells = 0;
    for (const Domain& d : domains_)
        cells += d.size();
    return cells;
}

void Space::overwrite_domain(VarId v, const Domain& snapshot) {
    check_var(v, "overwrite_domain");
    domains_[static_cast<std::size_t>(v)] = snapshot;
}

long long DomainDelta::cells() const {
    long long cells = 0;
    for (const auto& [var, dom] : entries)
        cells += dom.size();
    return cells;
}

DomainDelta snapshot_domains(const Space& s, const std::vector<VarId>& vars) {
    DomainDelta delta;
    delta.entries.reserve(vars.size());
    for (VarId v : vars)
        delta.entries.emplace_back(v, s.domain(v));
    return delta;
}

void apply_delta(Space& s, const DomainDelta& d) {
    for (const auto& [var, snapshot] : d.entries) {
        if (!snapshot.subset_of(s.domain(var)))
            throw InternalCorruptionError(
                "apply_delta: snapshot of variable " + std::to_string(var) +
                " is not a subset of the current domain");
        s.overwrite_domain(var, snapshot);
    }
}

bool domains_equal(const Space& a, const Space& b) {
    if (a.num_variables() != b.num_variables())
        throw std::invalid_argument("domains_equal: variable counts differ");
    for (VarId v = 0; v < a.num_variables(); ++v)
        if (a.domain(v) != b.domain(v))
            return false;
    return true;
}

}  // namespace fdres
