#ifndef FDRES_BRANCHING_HPP
#define FDRES_BRANCHING_HPP

#include "fdres/space.hpp"

namespace fdres {

// Binary branching decision produced at a fixpoint. Alternative 0 posts
// (var = value), alternative 1 posts (var != value).
struct Choice {
    VarId var;
    int value;
};

enum class VarRule { Leftmost, MinDomainSize };

// Value rule is always the domain minimum.
struct Heuristic {
    VarRule var_rule = VarRule::MinDomainSize;
};

// Picks the branching variable per the heuristic (ties broken by lowest id)
// and its domain minimum as the value. Must be called on a fixpoint space
// with at least one unfixed variable.
Choice make_choice(const Space& s, Heuristic h);

// Narrows per the alternative and schedules the variable's subscribers.
// Does not propagate; that is the engine's job. Committing alternative 1
// on a singleton domain marks the space failed for the next propagate.
void commit(Space& s, const Choice& c, int alternative);

}  // namespace fdres

#endif
