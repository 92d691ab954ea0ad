#include <doctest.h>

#include "fdres/path.hpp"
#include "fdres/models.hpp"

using namespace fdres;

namespace {

Path path_with_alternatives(const std::vector<int>& alts) {
    Space root = build_model({"queens", 4});
    root.propagate();
    Path p(root.clone());
    for (int a : alts) {
        Edge e{Choice{0, 1}};
        e.alternative = a;
        p.push(std::move(e));
    }
    return p;
}

}  // namespace

TEST_CASE("push and pop maintain depth and storage counters") {
    Space root = build_model({"queens", 4});
    root.propagate();
    Path p(root.clone());
    CHECK(p.depth() == 0);

    Edge e{Choice{0, 1}};
    e.copy = root.clone();
    p.push(std::move(e));
    CHECK(p.depth() == 1);
    CHECK(p.live_copies() == 1);
    CHECK(p.live_copy_cells() == 16);

    Edge bare{Choice{1, 3}};
    p.push(std::move(bare));
    CHECK(p.depth() == 2);
    CHECK(p.live_copies() == 1);

    p.pop();
    p.pop();
    CHECK(p.live_copies() == 0);
    CHECK(p.live_copy_cells() == 0);
}

TEST_CASE("adjust") {
    SUBCASE("flips a first-alternative top in place") {
        Path p = path_with_alternatives({0, 0});
        CHECK(adjust(p));
        CHECK(p.depth() == 2);
        CHECK(p.top().alternative == 1);
    }
    SUBCASE("exhausted stack reports unsolvable") {
        Path p = path_with_alternatives({1, 1, 1});
        CHECK_FALSE(adjust(p));
        CHECK(p.depth() == 0);
    }
    SUBCASE("pops exhausted edges then flips") {
        Path p = path_with_alternatives({0, 1});
        CHECK(adjust(p));
        CHECK(p.depth() == 1);
        CHECK(p.top().alternative == 1);
    }
}

TEST_CASE("recompute_node replays committed alternatives from the best base") {
    // Descend queens(4) manually: x0 != 1, then x0 = 2, keeping clones of
    // each node as the reference.
    Space root = build_model({"queens", 4});
    root.propagate();
    Path p(root.clone());

    Space cur = root.clone();
    Edge e1{Choice{0, 1}};
    e1.alternative = 1;
    p.push(std::move(e1));
    commit(cur, p.edge(1).choice, 1);
    cur.propagate();
    Space node1 = cur.clone();
    REQUIRE(node1.domain(0).values() == std::vector<int>{2, 3, 4});

    Edge e2{Choice{0, 2}};
    p.push(std::move(e2));
    commit(cur, p.edge(2).choice, 0);
    cur.propagate();
    Space node2 = cur.clone();

    CHECK(domains_equal(recompute_node(p, 0), root));
    CHECK(domains_equal(recompute_node(p, 1), node1));
    CHECK(domains_equal(recompute_node(p, 2), node2));

    SUBCASE("a stored copy shortcuts the replay") {
        Path q(root.clone());
        Edge f1{Choice{0, 1}};
        f1.alternative = 1;
        q.push(std::move(f1));
        Edge f2{Choice{0, 2}};
        f2.copy = node1.clone();  // edge 2's origin is node 1
        q.push(std::move(f2));
        CHECK(q.nearest_copy_at_or_above(2) == 2);
        CHECK(domains_equal(recompute_node(q, 1), node1));
    }
}
