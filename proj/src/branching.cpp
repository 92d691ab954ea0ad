#include "fdres/branching.hpp"

#include <stdexcept>

namespace fdres {

Choice make_choice(const Space& s, Heuristic h) {
    if (s.failed())
        throw std::logic_error("make_choice: called on a failed space");
    VarId best = -1;
    for (VarId v = 0; v < s.num_variables(); ++v) {
        const Domain& d = s.domain(v);
        if (d.fixed())
            continue;
        if (best < 0) {
            best = v;
            if (h.var_rule == VarRule::Leftmost)
                break;
        } else if (h.var_rule == VarRule::MinDomainSize &&
                   d.size() < s.domain(best).size()) {
            best = v;
        }
    }
    if (best < 0)
        throw std::logic_error("make_choice: called on a solved space");
    return {best, s.domain(best).min()};
}

void commit(Space& s, const Choice& c, int alternative) {
    if (alternative != 0 && alternative != 1)
        throw std::logic_error("commit: alternative must be 0 or 1");
    if (alternative == 0)
        s.assign(c.var, c.value);
    else
        s.exclude(c.var, c.value);
}

}  // namespace fdres
