#include "wmnca/ca_schemes.hpp"

#include "wmnca/cdal.hpp"
#include "wmnca/rng.hpp"
#include "wmnca/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace wmnca {

SchemeKind scheme_kind_from_string(const std::string& name) {
    std::string up = name;
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
    if (up == "CEN") return SchemeKind::CEN;
    if (up == "BFS") return SchemeKind::BFS;
    if (up == "CLQ") return SchemeKind::CLQ;
    if (up == "MIS") return SchemeKind::MIS;
    if (up == "OIS") return SchemeKind::OIS;
    if (up == "GSCA") return SchemeKind::GSCA;
    throw std::invalid_argument("unknown scheme kind: " + name);
}

std::string to_string(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::CEN: return "CEN";
        case SchemeKind::BFS: return "BFS";
        case SchemeKind::CLQ: return "CLQ";
        case SchemeKind::MIS: return "MIS";
        case SchemeKind::OIS: return "OIS";
        case SchemeKind::GSCA: return "GSCA";
    }
    throw std::invalid_argument("unknown scheme kind");
}

std::string SchemeSpec::label() const {
    if (kind == SchemeKind::GSCA) return "GSCA";
    return to_string(kind) + (conflict_model == ConflictModel::Conventional ? "_C" : "_E");
}

namespace {

// Static round-robin of channels over each node's radio indices; every
// node looks the same, so co-channel overlap is maximal.
ChannelAssignment assign_cen(const WmnGraph& g, const ChannelSet& cs) {
    ChannelAssignment ca;
    const auto& channels = cs.channels();
    for (const Node& n : g.nodes())
        for (int r = 0; r < n.radios; ++r)
            ca.set({n.id, r}, channels[static_cast<std::size_t>(r) % channels.size()]);
    return ca;
}

std::vector<NodeId> bfs_order(const WmnGraph& g) {
    auto adj = adjacency(g);
    std::set<NodeId> unvisited;
    for (const Node& n : g.nodes()) unvisited.insert(n.id);

    std::vector<NodeId> order;
    while (!unvisited.empty()) {
        std::deque<NodeId> queue{*unvisited.begin()};
        unvisited.erase(unvisited.begin());
        while (!queue.empty()) {
            NodeId cur = queue.front();
            queue.pop_front();
            order.push_back(cur);
            for (NodeId nb : adj[cur]) {  // std::set: ascending id
                if (unvisited.erase(nb)) queue.push_back(nb);
            }
        }
    }
    return order;
}

// Breadth-first traversal from the lowest node id, gateway style: each
// visited node's first radio joins the least-loaded channel already present
// on assigned neighbors, so the traversal link always materializes; the
// remaining radios take the least-used channel overall. The enhanced
// variant also counts the node's own radios as they are assigned, spreading
// channels across co-located radios.
ChannelAssignment assign_bfs(const WmnGraph& g, const ChannelSet& cs, ConflictModel model) {
    auto adj = adjacency(g);
    ChannelAssignment ca;
    for (NodeId i : bfs_order(g)) {
        std::map<ChannelId, int> counts;
        for (ChannelId c : cs.channels()) counts[c] = 0;
        for (NodeId nb : adj[i])
            for (auto it = ca.entries().lower_bound({nb, 0});
                 it != ca.entries().end() && it->first.node == nb; ++it)
                ++counts[it->second];

        const int radios = g.node(i).radios;
        for (int r = 0; r < radios; ++r) {
            ChannelId best = 0;
            bool found = false;
            if (r == 0) {  // uplink: restrict to channels the neighbors carry
                for (ChannelId c : cs.channels())
                    if (counts[c] > 0 && (!found || counts[c] < counts[best])) {
                        best = c;
                        found = true;
                    }
            }
            if (!found) {
                best = cs.channels().front();
                for (ChannelId c : cs.channels())
                    if (counts[c] < counts[best]) best = c;
            }
            ca.set({i, r}, best);
            if (model == ConflictModel::Enhanced) ++counts[best];
        }
    }
    return ca;
}

// Repeatedly pull the greedy maximal clique out of the current conflict
// graph and spread distinct channels across its links, up to `budget`
// iterations or until the assignment revisits an earlier state.
ChannelAssignment assign_clq(const WmnGraph& g, const ChannelSet& cs, ConflictModel model,
                             std::uint64_t seed, long long budget) {
    ChannelAssignment ca = assign_cen(g, cs);
    std::mt19937_64 rng(seed);
    std::set<ChannelAssignment> seen{ca};
    const auto& channels = cs.channels();
    const std::size_t m = channels.size();

    for (long long iter = 0; iter < budget; ++iter) {
        ConflictGraph cg = build_mmcg(g, ca, model);
        if (cg.edges.empty()) break;

        std::vector<std::set<int>> nbrs(cg.links.size());
        for (const auto& [i, j] : cg.edges) {
            nbrs[static_cast<std::size_t>(i)].insert(j);
            nbrs[static_cast<std::size_t>(j)].insert(i);
        }
        auto deg = cg.degrees();
        auto pick_best = [&](const std::set<int>& candidates) {
            int best = -1;
            for (int v : candidates)
                if (best == -1 || deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(best)])
                    best = v;
            return best;
        };

        std::set<int> candidates;
        for (int v = 0; v < static_cast<int>(cg.links.size()); ++v) candidates.insert(v);
        std::vector<int> clique;
        while (!candidates.empty()) {
            int u = pick_best(candidates);
            clique.push_back(u);
            std::set<int> next;
            for (int v : candidates)
                if (nbrs[static_cast<std::size_t>(u)].count(v)) next.insert(v);
            candidates = std::move(next);
        }

        std::sort(clique.begin(), clique.end());
        std::size_t offset = static_cast<std::size_t>(rand_below(rng, m));
        for (std::size_t k = 0; k < clique.size(); ++k) {
            ChannelId c = channels[(offset + k) % m];
            const Link& l = cg.links[static_cast<std::size_t>(clique[k])];
            ca.set(l.a, c);
            ca.set(l.b, c);
        }
        if (!seen.insert(ca).second) break;
    }
    return ca;
}

// Greedy maximal independent sets over the channel-free potential-link
// conflict graph, one per channel in seeded order; leftover radios take
// the least-used channel. The enhanced variant avoids repeating a channel
// on one node's radios.
ChannelAssignment assign_mis(const WmnGraph& g, const ChannelSet& cs, ConflictModel model,
                             std::uint64_t seed) {
    TidEvaluator structure(g, model);
    const auto& plinks = structure.potential_links();
    const auto& adj = structure.pair_adjacency();
    const std::size_t num_links = plinks.size();

    std::mt19937_64 rng(seed);
    std::vector<int> order(num_links);
    for (std::size_t i = 0; i < num_links; ++i) order[i] = static_cast<int>(i);
    shuffle_vec(rng, order);

    ChannelAssignment ca;
    std::map<NodeId, std::map<ChannelId, int>> node_counts;
    std::map<ChannelId, int> global_counts;
    for (ChannelId c : cs.channels()) global_counts[c] = 0;

    auto set_radio = [&](RadioId r, ChannelId c) {
        ca.set(r, c);
        ++node_counts[r.node][c];
        ++global_counts[c];
    };

    std::vector<bool> removed(num_links, false);
    for (ChannelId c : cs.channels()) {
        std::vector<bool> in_is(num_links, false);
        std::vector<int> is_links;
        for (int idx : order) {
            if (removed[static_cast<std::size_t>(idx)]) continue;
            bool blocked = false;
            for (const auto& [q, kind] : adj[static_cast<std::size_t>(idx)]) {
                (void)kind;
                if (in_is[static_cast<std::size_t>(q)]) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) continue;
            in_is[static_cast<std::size_t>(idx)] = true;
            is_links.push_back(idx);
        }

        std::sort(is_links.begin(), is_links.end());
        for (int idx : is_links) {
            for (RadioId r : {plinks[static_cast<std::size_t>(idx)].a,
                              plinks[static_cast<std::size_t>(idx)].b}) {
                if (ca.channel(r)) continue;
                if (model == ConflictModel::Enhanced && node_counts[r.node][c] > 0) continue;
                set_radio(r, c);
            }
            removed[static_cast<std::size_t>(idx)] = true;
        }
    }

    for (RadioId r : g.all_radios()) {
        if (ca.channel(r)) continue;
        ChannelId best = cs.channels().front();
        for (ChannelId c : cs.channels()) {
            if (model == ConflictModel::Enhanced) {
                auto key = [&](ChannelId ch) {
                    return std::pair<int, int>(node_counts[r.node][ch], global_counts[ch]);
                };
                if (key(c) < key(best)) best = c;
            } else if (global_counts[c] < global_counts[best]) {
                best = c;
            }
        }
        set_radio(r, best);
    }
    return ca;
}

// MIS on the enhanced model followed by an evenness pass: first-improvement
// single-radio moves that lower the spread of the expected per-channel link
// mass (the cdal cost), ties broken toward more even per-channel radio
// counts, never increasing the enhanced TID.
ChannelAssignment assign_ois(const WmnGraph& g, const ChannelSet& cs, std::uint64_t seed,
                             long long budget) {
    ChannelAssignment ca = assign_mis(g, cs, ConflictModel::Enhanced, seed);
    TidEvaluator eval(g, ConflictModel::Enhanced);
    eval.reset(ca);

    std::map<ChannelId, long long> counts;
    for (ChannelId c : cs.channels()) counts[c] = 0;
    for (const auto& [r, c] : ca.entries()) ++counts.at(c);

    const auto radios = g.all_radios();
    double cost = estimate(g, ca, cs).cost;
    long long evals = 0;
    bool improved = true;
    while (improved && evals < budget) {
        improved = false;
        for (RadioId r : radios) {
            ChannelId cur = *ca.channel(r);
            for (ChannelId c : cs.channels()) {
                if (c == cur) continue;
                if (++evals > budget) return ca;
                if (eval.tid_if_flipped(r, c) > eval.current()) continue;
                ca.set(r, c);
                double moved = estimate(g, ca, cs).cost;
                // Spread of counts is monotone in the sum of squares; the
                // move changes it by 2*(counts[c] - counts[cur] + 1).
                bool counts_improve = counts.at(c) - counts.at(cur) + 1 < 0;
                if (moved < cost - 1e-12 ||
                    (std::abs(moved - cost) <= 1e-12 && counts_improve)) {
                    eval.apply_flip(r, c);
                    --counts.at(cur);
                    ++counts.at(c);
                    cost = moved;
                    improved = true;
                    break;
                }
                ca.set(r, cur);
            }
            if (improved) break;
        }
    }
    return ca;
}

// Exhaustive search when the assignment space fits the budget, otherwise
// seeded random restarts with first-improvement single-radio flips, both
// minimizing the conventional TID.
ChannelAssignment assign_gsca(const WmnGraph& g, const ChannelSet& cs, std::uint64_t seed,
                              long long budget) {
    TidEvaluator eval(g, ConflictModel::Conventional);
    const auto radios = g.all_radios();
    const auto& channels = cs.channels();
    const std::size_t m = channels.size();

    double space = 1;
    for (std::size_t i = 0; i < radios.size() && space <= static_cast<double>(budget); ++i)
        space *= static_cast<double>(m);

    if (space <= static_cast<double>(budget)) {
        std::vector<std::size_t> digits(radios.size(), 0);
        ChannelAssignment best;
        long long best_tid = std::numeric_limits<long long>::max();
        while (true) {
            ChannelAssignment ca;
            for (std::size_t i = 0; i < radios.size(); ++i) ca.set(radios[i], channels[digits[i]]);
            long long t = eval.evaluate(ca);
            if (t < best_tid) {
                best_tid = t;
                best = ca;
            }
            // odometer, last radio fastest
            std::size_t pos = radios.size();
            while (pos > 0) {
                if (++digits[pos - 1] < m) break;
                digits[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
        return best;
    }

    std::mt19937_64 rng(seed);
    ChannelAssignment best;
    long long best_tid = std::numeric_limits<long long>::max();
    long long evals = 0;
    while (evals < budget) {
        ChannelAssignment ca;
        for (RadioId r : radios)
            ca.set(r, channels[static_cast<std::size_t>(rand_below(rng, m))]);
        eval.reset(ca);
        ++evals;

        bool improved = true;
        while (improved && evals < budget) {
            improved = false;
            for (RadioId r : radios) {
                ChannelId cur = *eval.assignment().channel(r);
                for (ChannelId c : channels) {
                    if (c == cur) continue;
                    if (evals >= budget) break;
                    ++evals;
                    if (eval.tid_if_flipped(r, c) < eval.current()) {
                        eval.apply_flip(r, c);
                        improved = true;
                        break;
                    }
                }
                if (improved) break;
            }
        }

        const ChannelAssignment& cand = eval.assignment();
        if (eval.current() < best_tid || (eval.current() == best_tid && cand < best)) {
            best_tid = eval.current();
            best = cand;
        }
    }
    return best;
}

}  // namespace

ChannelAssignment assign(const SchemeSpec& spec, const WmnGraph& g, const ChannelSet& cs) {
    if ((spec.kind == SchemeKind::GSCA || spec.kind == SchemeKind::OIS) && spec.budget < 1)
        throw std::invalid_argument("budget must be >= 1 for GSCA/OIS");
    switch (spec.kind) {
        case SchemeKind::CEN: return assign_cen(g, cs);
        case SchemeKind::BFS: return assign_bfs(g, cs, spec.conflict_model);
        case SchemeKind::CLQ: return assign_clq(g, cs, spec.conflict_model, spec.seed, spec.budget);
        case SchemeKind::MIS: return assign_mis(g, cs, spec.conflict_model, spec.seed);
        case SchemeKind::OIS: return assign_ois(g, cs, spec.seed, spec.budget);
        case SchemeKind::GSCA: return assign_gsca(g, cs, spec.seed, spec.budget);
    }
    throw std::invalid_argument("unknown scheme kind");
}

std::vector<Violation> validate(const ChannelAssignment& ca, const WmnGraph& g,
                                const ChannelSet& cs) {
    std::vector<Violation> out;
    for (const Node& n : g.nodes())
        for (int r = 0; r < n.radios; ++r)
            if (!ca.channel({n.id, r}))
                out.push_back({Violation::Kind::UnassignedRadio,
                               "unassigned radio " + std::to_string(n.id) + "/" + std::to_string(r)});
    for (const auto& [r, c] : ca.entries()) {
        if (!g.has_node(r.node) || r.radio < 0 || r.radio >= g.node(r.node).radios)
            out.push_back({Violation::Kind::UnknownRadio,
                           "radio " + std::to_string(r.node) + "/" + std::to_string(r.radio) +
                               " is not part of the graph"});
        if (!cs.contains(c))
            out.push_back({Violation::Kind::ChannelOutOfSet,
                           "channel " + std::to_string(c) + " on radio " + std::to_string(r.node) +
                               "/" + std::to_string(r.radio) + " is outside the channel set"});
    }
    return out;
}

}  // namespace wmnca
