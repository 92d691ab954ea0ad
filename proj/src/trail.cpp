#include "fdres/trail.hpp"

namespace fdres {

void Trail::rollback_to(Space& s, std::size_t mark) {
    if (mark > log_.size())
        throw InternalCorruptionError("Trail::rollback_to: mark past end of log");
    while (log_.size() > mark) {
        const Entry e = log_.back();
        log_.pop_back();
        s.unchecked_insert(e.var, e.value);
    }
    s.clear_failed();
}

}  // namespace fdres
