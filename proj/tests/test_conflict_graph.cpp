#include "wmnca/conflict_graph.hpp"

#include "wmnca/rng.hpp"
#include "wmnca/topology.hpp"

#include <doctest.h>

#include <random>

using namespace wmnca;

namespace {

ChannelAssignment uniform_ca(const WmnGraph& g, ChannelId c) {
    ChannelAssignment ca;
    for (RadioId r : g.all_radios()) ca.set(r, c);
    return ca;
}

ChannelAssignment random_ca(const WmnGraph& g, int channels, std::mt19937_64& rng) {
    ChannelAssignment ca;
    for (RadioId r : g.all_radios())
        ca.set(r, static_cast<ChannelId>(rand_below(rng, static_cast<std::uint64_t>(channels))) + 1);
    return ca;
}

// edge set recomputed straight from the pairwise predicate
std::vector<std::pair<int, int>> brute_force_edges(const WmnGraph& g, const LinkSet& links,
                                                   ConflictModel model,
                                                   const ConflictOptions& opts = {}) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < links.size(); ++i)
        for (std::size_t j = i + 1; j < links.size(); ++j)
            if (links_conflict(g, links[i], links[j], model, opts))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return edges;
}

WmnGraph random_graph(std::mt19937_64& rng, int max_nodes) {
    int n = 2 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(max_nodes - 1)));
    std::vector<Node> nodes;
    for (int i = 0; i < n; ++i) {
        double x, y;
        bool clash;
        do {
            x = static_cast<double>(rand_below(rng, 700));
            y = static_cast<double>(rand_below(rng, 700));
            clash = false;
            for (const Node& other : nodes)
                if (other.x == x && other.y == y) clash = true;
        } while (clash);
        nodes.push_back({i, x, y, 1 + static_cast<int>(rand_below(rng, 3))});
    }
    return WmnGraph(std::move(nodes), 250, 500);
}

}  // namespace

TEST_CASE("co-located orthogonal-channel links: no conventional edge, one enhanced edge") {
    // B carries two radios; links A-B and B-C run through different radios
    // of B on different channels
    WmnGraph g({{0, 0, 0, 1}, {1, 200, 0, 2}, {2, 400, 0, 1}}, 250, 500);
    ChannelAssignment ca;
    ca.set({0, 0}, 1);
    ca.set({1, 0}, 1);
    ca.set({1, 1}, 2);
    ca.set({2, 0}, 2);

    ConflictGraph conv = build_mmcg(g, ca, ConflictModel::Conventional);
    REQUIRE(conv.links.size() == 2);
    CHECK(conv.edges.empty());
    CHECK(tid(conv) == 0);

    ConflictGraph enh = build_mmcg(g, ca, ConflictModel::Enhanced);
    REQUIRE(enh.links.size() == 2);
    CHECK(enh.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(tid(enh) == 1);
}

TEST_CASE("single-radio chain: shared-radio pairs are no interference conflict") {
    // A-B and B-C both use radio B/0. A radio cannot drive two links at
    // once; that is scheduling, not interference, so the default predicate
    // excludes the pair. Disabling the exclusion counts it as a same-region
    // same-channel conflict.
    WmnGraph g = generate_grid(1, 3, 200, 1, 250, 500);
    ChannelAssignment ca = uniform_ca(g, 1);

    CHECK(tid(build_mmcg(g, ca, ConflictModel::Conventional)) == 0);
    CHECK(tid(build_mmcg(g, ca, ConflictModel::Enhanced)) == 0);

    ConflictOptions keep_shared;
    keep_shared.exclude_shared_radio = false;
    ConflictGraph cg = build_mmcg(g, ca, ConflictModel::Conventional, keep_shared);
    CHECK(cg.edges == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(tid(cg) == 1);
}

TEST_CASE("empty link set gives an empty conflict graph") {
    WmnGraph g = generate_grid(1, 2, 200, 1, 250, 500);
    ChannelAssignment ca;
    ca.set({0, 0}, 1);
    ca.set({1, 0}, 2);
    ConflictGraph cg = build_mmcg(g, ca, ConflictModel::Enhanced);
    CHECK(cg.links.empty());
    CHECK(tid(cg) == 0);
}

TEST_CASE("2x2 single-channel grid matches the brute-force oracle") {
    WmnGraph g = generate_grid(2, 2, 200, 1, 250, 500);
    ChannelAssignment ca = uniform_ca(g, 1);
    ConflictGraph cg = build_mmcg(g, ca, ConflictModel::Conventional);
    CHECK(cg.edges == brute_force_edges(g, cg.links, ConflictModel::Conventional));
    // 4 links, every pair within range, every pair shares a node's radio
    // except the two opposite sides
    CHECK(tid(cg) == 2);
}

TEST_CASE("incomplete assignment is rejected") {
    WmnGraph g = generate_grid(1, 2, 200, 2, 250, 500);
    ChannelAssignment ca;
    ca.set({0, 0}, 1);
    CHECK_THROWS_AS(build_mmcg(g, ca, ConflictModel::Conventional), IncompleteAssignmentError);
    CHECK_THROWS_AS(TidEvaluator(g, ConflictModel::Conventional).evaluate(ca),
                    IncompleteAssignmentError);
}

TEST_CASE("conflict-graph properties on random instances") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        WmnGraph g = random_graph(rng, 6);
        ChannelAssignment ca = random_ca(g, 3, rng);

        for (ConflictModel model : {ConflictModel::Conventional, ConflictModel::Enhanced}) {
            ConflictGraph cg = build_mmcg(g, ca, model);

            // oracle equivalence
            CHECK(cg.edges == brute_force_edges(g, cg.links, model));

            // 2 TID = sum of degrees
            long long degree_sum = 0;
            for (int d : cg.degrees()) degree_sum += d;
            CHECK(2 * tid(cg) == degree_sum);

            if (model == ConflictModel::Conventional)
                for (const auto& [i, j] : cg.edges)
                    CHECK(cg.links[static_cast<std::size_t>(i)].channel ==
                          cg.links[static_cast<std::size_t>(j)].channel);
        }

        // model monotonicity: every conventional edge is an enhanced edge
        ConflictGraph conv = build_mmcg(g, ca, ConflictModel::Conventional);
        ConflictGraph enh = build_mmcg(g, ca, ConflictModel::Enhanced);
        REQUIRE(conv.links == enh.links);
        for (const auto& e : conv.edges)
            CHECK(std::find(enh.edges.begin(), enh.edges.end(), e) != enh.edges.end());
        CHECK(tid(enh) >= tid(conv));
    }
}

TEST_CASE("channel relabeling leaves TID unchanged") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        WmnGraph g = random_graph(rng, 6);
        ChannelAssignment ca = random_ca(g, 3, rng);

        std::vector<ChannelId> perm{1, 2, 3};
        shuffle_vec(rng, perm);
        ChannelAssignment relabeled;
        for (const auto& [r, c] : ca.entries())
            relabeled.set(r, perm[static_cast<std::size_t>(c - 1)]);

        for (ConflictModel model : {ConflictModel::Conventional, ConflictModel::Enhanced})
            CHECK(tid(build_mmcg(g, ca, model)) == tid(build_mmcg(g, relabeled, model)));
    }
}

TEST_CASE("incremental evaluator agrees with rebuilt graphs across flips") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        WmnGraph g = random_graph(rng, 6);
        ChannelAssignment ca = random_ca(g, 3, rng);
        const auto radios = g.all_radios();

        for (ConflictModel model : {ConflictModel::Conventional, ConflictModel::Enhanced}) {
            TidEvaluator eval(g, model);
            CHECK(eval.evaluate(ca) == tid(build_mmcg(g, ca, model)));

            eval.reset(ca);
            ChannelAssignment current = ca;
            for (int step = 0; step < 25; ++step) {
                RadioId r = radios[rand_below(rng, radios.size())];
                ChannelId c = static_cast<ChannelId>(rand_below(rng, 3)) + 1;

                ChannelAssignment flipped = current;
                flipped.set(r, c);
                long long expected = tid(build_mmcg(g, flipped, model));
                CHECK(eval.tid_if_flipped(r, c) == expected);

                if (step % 2 == 0) {  // sometimes apply, sometimes only probe
                    eval.apply_flip(r, c);
                    current = flipped;
                    CHECK(eval.current() == expected);
                    CHECK(eval.assignment() == current);
                }
            }
        }
    }
}
