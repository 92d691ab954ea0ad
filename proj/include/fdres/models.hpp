#ifndef FDRES_MODELS_HPP
#define FDRES_MODELS_HPP

#include <stdexcept>
#include <string>

#include "fdres/space.hpp"

namespace fdres {

// Bad command-line or model parameters; the CLI maps this to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// queens(n):   n variables over {1..n}, pairwise disequalities for columns
//              and both diagonals.
// queens-s(n): same variables, three offset-alldifferent propagators.
// Both models prune identically under value consistency, so their search
// trees are node-for-node identical.
struct ModelSpec {
    std::string name;  // "queens" | "queens-s"
    int n = 0;
};

// Returns the un-propagated root space for the model.
Space build_model(const ModelSpec& spec);

}  // namespace fdres

#endif
