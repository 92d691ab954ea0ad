#ifndef FDRES_TRAIL_HPP
#define FDRES_TRAIL_HPP

#include <cstddef>
#include <vector>

#include "fdres/space.hpp"

namespace fdres {

// Ordered log of single-value removals. Rolling back to a mark re-inserts
// every value removed since that mark, restoring each affected domain to its
// exact pre-segment contents.
class Trail {
public:
    struct Entry {
        VarId var;
        int value;
    };

    std::size_t mark() const { return log_.size(); }
    std::size_t size() const { return log_.size(); }

    void record(VarId v, int value) { log_.push_back({v, value}); }

    // Undoes every entry past `mark` in reverse order and truncates the log.
    // Also clears the failure flag: emptiness is never materialized, so the
    // rolled-back domains are complete.
    void rollback_to(Space& s, std::size_t mark);

private:
    std::vector<Entry> log_;
};

}  // namespace fdres

#endif
