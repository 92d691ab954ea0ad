#include "fdres/models.hpp"

#include <numeric>

namespace fdres {

namespace {

Space build_queens(int n) {
    Space s;
    for (int i = 0; i < n; ++i)
        s.add_variable(1, n);
    for (VarId i = 0; i < n; ++i) {
        for (VarId j = i + 1; j < n; ++j) {
            s.post({NeqOffset{i, j, 0}});      // same column
            s.post({NeqOffset{i, j, i - j}});  // same diagonal
            s.post({NeqOffset{i, j, j - i}});  // same anti-diagonal
        }
    }
    return s;
}

Space build_queens_s(int n) {
    Space s;
    std::vector<VarId> vars;
    vars.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        vars.push_back(s.add_variable(1, n));

    std::vector<int> zero(static_cast<std::size_t>(n), 0);
    std::vector<int> up(static_cast<std::size_t>(n));
    std::iota(up.begin(), up.end(), 0);
    std::vector<int> down(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        down[static_cast<std::size_t>(i)] = -i;

    s.post({AlldiffOffset{vars, zero}});
    s.post({AlldiffOffset{vars, up}});
    s.post({AlldiffOffset{vars, down}});
    return s;
}

}  // namespace

Space build_model(const ModelSpec& spec) {
    if (spec.n < 1)
        throw UsageError("build_model: n must be >= 1");
    if (spec.name == "queens")
        return build_queens(spec.n);
    if (spec.name == "queens-s")
        return build_queens_s(spec.n);
    throw UsageError("build_model: unknown model '" + spec.name + "'");
}

}  // namespace fdres
