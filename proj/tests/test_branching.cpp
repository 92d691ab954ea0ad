#include <doctest.h>

#include <algorithm>

#include "fdres/branching.hpp"
#include "test_support.hpp"

using namespace fdres;

namespace {

Space two_vars(std::vector<int> d0, std::vector<int> d1) {
    Space s;
    s.add_variable(1, 5);
    s.add_variable(1, 5);
    for (int v = 1; v <= 5; ++v) {
        if (std::find(d0.begin(), d0.end(), v) == d0.end())
            s.exclude(0, v);
        if (std::find(d1.begin(), d1.end(), v) == d1.end())
            s.exclude(1, v);
    }
    return s;
}

}  // namespace

TEST_CASE("make_choice picks per the heuristic, value = domain minimum") {
    SUBCASE("min-dom prefers the smaller domain") {
        Space s = two_vars({1, 2}, {1, 2, 3});
        const Choice c = make_choice(s, {VarRule::MinDomainSize});
        CHECK(c.var == 0);
        CHECK(c.value == 1);
    }
    SUBCASE("leftmost ignores sizes") {
        Space s = two_vars({1, 2, 3}, {1, 2});
        const Choice c = make_choice(s, {VarRule::Leftmost});
        CHECK(c.var == 0);
        CHECK(c.value == 1);
    }
    SUBCASE("min-dom ties break to the lowest id") {
        Space s = two_vars({1, 2}, {3, 4});
        const Choice c = make_choice(s, {VarRule::MinDomainSize});
        CHECK(c.var == 0);
        CHECK(c.value == 1);
    }
    SUBCASE("fixed variables are skipped") {
        Space s = two_vars({2}, {3, 4});
        const Choice c = make_choice(s, {VarRule::Leftmost});
        CHECK(c.var == 1);
        CHECK(c.value == 3);
    }
    SUBCASE("choosing on a solved space is a usage error") {
        Space s = two_vars({2}, {3});
        CHECK_THROWS_AS(make_choice(s, {}), std::logic_error);
    }
}

TEST_CASE("commit narrows one alternative") {
    Space s = two_vars({1, 2}, {1, 2, 3});
    const Choice c{0, 1};

    SUBCASE("alternative 0 fixes the variable") {
        commit(s, c, 0);
        CHECK(s.domain(0).values() == std::vector<int>{1});
        CHECK_FALSE(s.failed());
    }
    SUBCASE("alternative 1 removes the value") {
        commit(s, c, 1);
        CHECK(s.domain(0).values() == std::vector<int>{2});
    }
    SUBCASE("the alternatives partition the parent domain") {
        Space a = s.clone();
        Space b = s.clone();
        commit(a, c, 0);
        commit(b, c, 1);
        std::vector<int> merged = a.domain(0).values();
        for (int v : b.domain(0).values())
            merged.push_back(v);
        std::sort(merged.begin(), merged.end());
        CHECK(merged == s.domain(0).values());
    }
    SUBCASE("removing the last value defers failure to propagate") {
        Space t = two_vars({1}, {1, 2});
        commit(t, Choice{0, 1}, 1);
        CHECK(t.failed());
        CHECK(t.domain(0).size() == 1);
        CHECK(t.propagate().status == Status::Failed);
    }
}

TEST_CASE("alternative assignment sets partition the parent's") {
    // post-propagation solution sets of the two children split the parent's
    std::mt19937 rng(20240811);
    for (int instance = 0; instance < 40; ++instance) {
        std::vector<std::vector<int>> domains;
        std::vector<test::NeqSpec> constraints;
        Space s = test::random_csp(rng, &domains, &constraints);
        if (s.propagate().status != Status::Fixpoint)
            continue;

        // re-read the propagated domains for the brute-force oracle
        std::vector<std::vector<int>> current;
        for (VarId v = 0; v < s.num_variables(); ++v)
            current.push_back(s.domain(v).values());
        const auto parent_solutions = test::csp_solutions_brute(current, constraints);

        const Choice c = make_choice(s, {});
        Space left = s.clone();
        Space right = s.clone();
        commit(left, c, 0);
        commit(right, c, 1);
        left.propagate();
        right.propagate();

        std::size_t count = 0;
        for (const Space* child : {&left, &right}) {
            if (child->failed())
                continue;
            std::vector<std::vector<int>> child_domains;
            for (VarId v = 0; v < child->num_variables(); ++v)
                child_domains.push_back(child->domain(v).values());
            count += test::csp_solutions_brute(child_domains, constraints).size();
        }
        CHECK(count == parent_solutions.size());
    }
}

TEST_CASE("make_choice is a pure function of domains and heuristic") {
    Space s = build_model({"queens", 6});
    s.propagate();
    s.assign(0, 2);
    s.propagate();
    const Choice a = make_choice(s, {VarRule::MinDomainSize});
    const Choice b = make_choice(s.clone(), {VarRule::MinDomainSize});
    CHECK(a.var == b.var);
    CHECK(a.value == b.value);
}
