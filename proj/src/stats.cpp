#include "fdres/stats.hpp"

#include <algorithm>

namespace fdres {

void SearchStats::record_failure(int depth) {
    ++failures;
    if (!first)
        first = depth;
    if (depth >= *first)
        ++below_first;
    else
        ++above_first;
    peak = std::max(peak, depth);
}

void SearchStats::record_fixpoint(int depth) {
    ++nodes;
    peak = std::max(peak, depth);
}

void SearchStats::record_solution(int depth) {
    ++solutions;
    peak = std::max(peak, depth);
}

}  // namespace fdres
