#include "wmnca/topology.hpp"

#include <doctest.h>

#include <cmath>

using namespace wmnca;

namespace {

// brute-force adjacency straight from the definition
bool adjacent_oracle(const WmnGraph& g, NodeId i, NodeId j) {
    return i != j && g.distance(i, j) <= g.tx_range_m();
}

ChannelAssignment uniform_ca(const WmnGraph& g, ChannelId c) {
    ChannelAssignment ca;
    for (RadioId r : g.all_radios()) ca.set(r, c);
    return ca;
}

}  // namespace

TEST_CASE("grid generator places nodes on the lattice") {
    WmnGraph g = generate_grid(5, 5, 200, 2, 250, 500);
    CHECK(g.node_count() == 25);
    CHECK(g.total_radios() == 50);
    CHECK(g.node(0).x == 0.0);
    CHECK(g.node(0).y == 0.0);
    CHECK(g.node(24).x == 800.0);
    CHECK(g.node(24).y == 800.0);
    CHECK(g.node(7).x == 400.0);  // row 1, col 2
    CHECK(g.node(7).y == 200.0);

    // interior nodes see exactly their 4 orthogonal neighbors
    auto adj = adjacency(g);
    CHECK(adj[12].size() == 4);
    CHECK(adj[12] == std::set<NodeId>{7, 11, 13, 17});
}

TEST_CASE("grid degree histogram is corners 2, edges 3, interior 4") {
    WmnGraph g = generate_grid(4, 6, 200, 1, 250, 500);
    auto adj = adjacency(g);
    int corners = 0, edges = 0, interior = 0;
    for (const Node& n : g.nodes()) {
        switch (adj[n.id].size()) {
            case 2: ++corners; break;
            case 3: ++edges; break;
            case 4: ++interior; break;
            default: FAIL("unexpected degree");
        }
    }
    CHECK(corners == 4);
    CHECK(edges == 2 * (4 - 2) + 2 * (6 - 2));
    CHECK(interior == (4 - 2) * (6 - 2));
}

TEST_CASE("grid generator rejects bad input") {
    CHECK_THROWS_WITH_AS(generate_grid(0, 5, 200, 1, 250, 500),
                         "invalid dimensions: grid must be at least 1x1", std::invalid_argument);
    CHECK_THROWS_AS(generate_grid(5, -1, 200, 1, 250, 500), std::invalid_argument);
    CHECK_THROWS_AS(generate_grid(5, 5, 0, 1, 250, 500), std::invalid_argument);
    CHECK_THROWS_AS(generate_grid(5, 5, 200, 0, 250, 500), std::invalid_argument);
    CHECK_THROWS_AS(generate_grid(5, 5, 200, 1, 250, 100), std::invalid_argument);  // if < tx
}

TEST_CASE("singleton and minimal pair grids") {
    WmnGraph one = generate_grid(1, 1, 200, 2, 250, 500);
    CHECK(one.node_count() == 1);
    CHECK(adjacency(one)[0].empty());

    WmnGraph pair = generate_grid(1, 2, 200, 1, 250, 500);
    CHECK(pair.node_count() == 2);
    CHECK(adjacent_pairs(pair) == std::vector<std::pair<NodeId, NodeId>>{{0, 1}});
}

TEST_CASE("two nodes beyond range are not adjacent") {
    WmnGraph g({{0, 0, 0, 1}, {1, 300, 0, 1}}, 250, 500);
    CHECK(adjacency(g)[0].empty());
    CHECK(adjacency(g)[1].empty());
}

TEST_CASE("adjacency matches the distance definition and is symmetric") {
    WmnGraph g = generate_grid(5, 5, 200, 2, 250, 500);
    auto adj = adjacency(g);
    for (const Node& a : g.nodes()) {
        for (const Node& b : g.nodes()) {
            bool listed = adj[a.id].count(b.id) > 0;
            CHECK(listed == adjacent_oracle(g, a.id, b.id));
            CHECK(listed == (adj[b.id].count(a.id) > 0));
        }
    }
    // corners have exactly 2 neighbors
    for (NodeId corner : {0, 4, 20, 24}) CHECK(adj[corner].size() == 2);
}

TEST_CASE("graph invariants are enforced") {
    CHECK_THROWS_AS(WmnGraph({{0, 0, 0, 1}, {1, 0, 0, 1}}, 250, 500),
                    std::invalid_argument);  // duplicate position
    CHECK_THROWS_AS(WmnGraph({{0, 0, 0, 1}, {0, 100, 0, 1}}, 250, 500),
                    std::invalid_argument);  // duplicate id
    CHECK_THROWS_AS(WmnGraph({{0, 0, 0, 0}}, 250, 500), std::invalid_argument);  // no radio
}

TEST_CASE("two nodes with two radios on the same two channels give two links") {
    WmnGraph g = generate_grid(1, 2, 200, 2, 250, 500);
    ChannelAssignment ca;
    ca.set({0, 0}, 1);
    ca.set({0, 1}, 2);
    ca.set({1, 0}, 1);
    ca.set({1, 1}, 2);
    LinkSet ls = find_link_set(g, ca);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == Link::make({0, 0}, {1, 0}, 1));
    CHECK(ls[1] == Link::make({0, 1}, {1, 1}, 2));
}

TEST_CASE("disjoint channels give an empty link set") {
    WmnGraph g = generate_grid(1, 2, 200, 2, 250, 500);
    ChannelAssignment ca;
    ca.set({0, 0}, 1);
    ca.set({0, 1}, 2);
    ca.set({1, 0}, 3);
    ca.set({1, 1}, 4);
    CHECK(find_link_set(g, ca).empty());
}

TEST_CASE("three-node single-channel line gives the two chain links") {
    WmnGraph g = generate_grid(1, 3, 200, 1, 250, 500);
    LinkSet ls = find_link_set(g, uniform_ca(g, 1));
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == Link::make({0, 0}, {1, 0}, 1));
    CHECK(ls[1] == Link::make({1, 0}, {2, 0}, 1));
}

TEST_CASE("incomplete assignment is rejected") {
    WmnGraph g = generate_grid(1, 2, 200, 2, 250, 500);
    ChannelAssignment ca;
    ca.set({0, 0}, 1);
    CHECK_THROWS_AS(find_link_set(g, ca), IncompleteAssignmentError);
}

TEST_CASE("link set matches a brute-force oracle on small graphs") {
    // irregular positions, mixed radio counts
    WmnGraph g({{0, 0, 0, 2}, {1, 200, 0, 3}, {2, 200, 200, 1}, {3, 0, 200, 2}, {4, 420, 0, 2}},
               250, 500);
    ChannelAssignment ca;
    int c = 0;
    for (RadioId r : g.all_radios()) ca.set(r, (c++ % 3) + 1);

    LinkSet got = find_link_set(g, ca);

    LinkSet expected;
    for (const Node& a : g.nodes()) {
        for (const Node& b : g.nodes()) {
            if (a.id >= b.id || !adjacent_oracle(g, a.id, b.id)) continue;
            for (int ra = 0; ra < a.radios; ++ra)
                for (int rb = 0; rb < b.radios; ++rb)
                    if (*ca.channel({a.id, ra}) == *ca.channel({b.id, rb}))
                        expected.push_back(
                            Link::make({a.id, ra}, {b.id, rb}, *ca.channel({a.id, ra})));
        }
    }
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);

    // soundness: endpoints adjacent, both radios carry the channel
    for (const Link& l : got) {
        CHECK(adjacent_oracle(g, l.a.node, l.b.node));
        CHECK(*ca.channel(l.a) == l.channel);
        CHECK(*ca.channel(l.b) == l.channel);
    }
}
