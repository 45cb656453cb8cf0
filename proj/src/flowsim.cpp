#include "wmnca/flowsim.hpp"

#include "wmnca/topology.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>

namespace wmnca {

namespace {

// Hop distances to dst over the node adjacency, -1 where unreachable.
std::map<NodeId, int> hop_distances(const std::map<NodeId, std::set<NodeId>>& adj, NodeId dst) {
    std::map<NodeId, int> dist;
    dist[dst] = 0;
    std::deque<NodeId> queue{dst};
    while (!queue.empty()) {
        NodeId cur = queue.front();
        queue.pop_front();
        auto it = adj.find(cur);
        if (it == adj.end()) continue;
        for (NodeId nb : it->second)
            if (!dist.count(nb)) {
                dist[nb] = dist.at(cur) + 1;
                queue.push_back(nb);
            }
    }
    return dist;
}

int hops_between(const std::map<NodeId, std::set<NodeId>>& adj, NodeId src, NodeId dst) {
    auto dist = hop_distances(adj, dst);
    auto it = dist.find(src);
    return it == dist.end() ? -1 : it->second;
}

}  // namespace

std::vector<NodeId> shortest_path(const WmnGraph& g, NodeId src, NodeId dst) {
    if (!g.has_node(src) || !g.has_node(dst))
        throw RoutingError("no such node: " + std::to_string(g.has_node(src) ? dst : src));
    auto adj = adjacency(g);
    auto dist = hop_distances(adj, dst);
    if (!dist.count(src))
        throw RoutingError("no path between nodes " + std::to_string(src) + " and " +
                           std::to_string(dst));

    // Walking downhill in dist and always taking the smallest next node id
    // yields the lexicographically smallest minimum-hop sequence.
    std::vector<NodeId> path{src};
    NodeId cur = src;
    while (cur != dst) {
        NodeId next = -1;
        for (NodeId nb : adj.at(cur)) {  // ascending
            auto it = dist.find(nb);
            if (it != dist.end() && it->second == dist.at(cur) - 1) {
                next = nb;
                break;
            }
        }
        path.push_back(next);
        cur = next;
    }
    return path;
}

std::vector<Flow> grid_flows(const WmnGraph& g, int rows, int cols, double demand_mbps) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("invalid dimensions: rows and cols must be >= 1");
    if (static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) != g.node_count())
        throw std::invalid_argument("grid dimensions do not match the graph");
    if (demand_mbps <= 0) throw std::invalid_argument("demand must be positive");

    auto adj = adjacency(g);
    auto node_at = [cols](int r, int c) { return r * cols + c; };

    std::vector<std::pair<NodeId, NodeId>> endpoints;
    for (int r = 0; r < rows; ++r) endpoints.emplace_back(node_at(r, 0), node_at(r, cols - 1));
    for (int c = 0; c < cols; ++c) endpoints.emplace_back(node_at(0, c), node_at(rows - 1, c));
    endpoints.emplace_back(node_at(0, 0), node_at(rows - 1, cols - 1));
    endpoints.emplace_back(node_at(0, cols - 1), node_at(rows - 1, 0));

    std::vector<Flow> flows;
    std::set<std::pair<NodeId, NodeId>> seen;
    for (auto [src, dst] : endpoints) {
        if (src == dst || !seen.insert({src, dst}).second) continue;
        // only genuinely multi-hop flows exercise the mesh
        if (hops_between(adj, src, dst) >= 2) flows.push_back({src, dst, demand_mbps});
    }
    return flows;
}

FlowSpec grid_flow_scenario(const WmnGraph& g, int rows, int cols, int n_flows,
                            double demand_mbps, double phy_rate_mbps) {
    if (n_flows < 1) throw std::invalid_argument("scenario needs at least one flow");
    std::vector<Flow> all = grid_flows(g, rows, cols, demand_mbps);
    if (static_cast<int>(all.size()) < n_flows)
        throw std::invalid_argument("grid too small for a " + std::to_string(n_flows) +
                                    "-flow scenario: only " + std::to_string(all.size()) +
                                    " multi-hop flows available");
    all.resize(static_cast<std::size_t>(n_flows));
    return {std::move(all), phy_rate_mbps};
}

std::vector<FlowSpec> grid_flow_scenarios(const WmnGraph& g, int rows, int cols,
                                          double demand_mbps, double phy_rate_mbps) {
    std::vector<FlowSpec> specs;
    for (int n : scenario_sizes())
        specs.push_back(grid_flow_scenario(g, rows, cols, n, demand_mbps, phy_rate_mbps));
    return specs;
}

SimResult simulate(const WmnGraph& g, const ChannelAssignment& ca, const FlowSpec& spec,
                   ConflictModel model) {
    if (spec.phy_rate_mbps <= 0) throw std::invalid_argument("phy rate must be positive");
    for (const Flow& f : spec.flows) {
        if (f.src == f.dst) throw std::invalid_argument("flow source equals destination");
        if (f.demand_mbps <= 0) throw std::invalid_argument("flow demand must be positive");
    }

    ConflictGraph cg = build_mmcg(g, ca, model);

    std::vector<std::set<int>> nbrs(cg.links.size());
    for (const auto& [i, j] : cg.edges) {
        nbrs[static_cast<std::size_t>(i)].insert(j);
        nbrs[static_cast<std::size_t>(j)].insert(i);
    }

    std::map<std::pair<NodeId, NodeId>, std::vector<int>> links_of_pair;
    for (std::size_t i = 0; i < cg.links.size(); ++i)
        links_of_pair[{cg.links[i].a.node, cg.links[i].b.node}].push_back(static_cast<int>(i));

    // Route every flow, then pick each hop's link: least-loaded channel
    // first (load = hops assigned so far, all flows), then lowest channel,
    // then canonical link order.
    const std::size_t nflows = spec.flows.size();
    std::vector<std::vector<int>> flow_links(nflows);  // link index per hop; -1 = no link
    std::map<ChannelId, int> channel_load;
    for (std::size_t fi = 0; fi < nflows; ++fi) {
        const Flow& f = spec.flows[fi];
        std::vector<NodeId> path = shortest_path(g, f.src, f.dst);
        for (std::size_t h = 0; h + 1 < path.size(); ++h) {
            NodeId u = std::min(path[h], path[h + 1]);
            NodeId v = std::max(path[h], path[h + 1]);
            auto it = links_of_pair.find({u, v});
            if (it == links_of_pair.end()) {
                flow_links[fi].push_back(-1);
                continue;
            }
            int best = -1;
            for (int li : it->second) {
                if (best == -1) {
                    best = li;
                    continue;
                }
                ChannelId bc = cg.links[static_cast<std::size_t>(best)].channel;
                ChannelId lc = cg.links[static_cast<std::size_t>(li)].channel;
                auto key = [&](ChannelId c, int idx) {
                    return std::tuple<int, ChannelId, int>(channel_load[c], c, idx);
                };
                if (key(lc, li) < key(bc, best)) best = li;
            }
            ++channel_load[cg.links[static_cast<std::size_t>(best)].channel];
            flow_links[fi].push_back(best);
        }
    }

    // A link is active when some hop uses it; its rate is the phy rate
    // discounted by the number of active conflicting links.
    std::set<int> active;
    for (const auto& fl : flow_links)
        for (int li : fl)
            if (li >= 0) active.insert(li);

    std::map<int, double> link_rate;
    std::map<int, std::vector<std::size_t>> link_flows;
    for (int li : active) {
        int busy = 0;
        for (int nb : nbrs[static_cast<std::size_t>(li)])
            if (active.count(nb)) ++busy;
        link_rate[li] = spec.phy_rate_mbps / (1.0 + busy);
    }
    for (std::size_t fi = 0; fi < nflows; ++fi)
        for (int li : flow_links[fi])
            if (li >= 0) link_flows[li].push_back(fi);

    // Max-min share of each link's rate among its flows, demands as caps.
    std::map<int, std::map<std::size_t, double>> share;
    for (const auto& [li, fs] : link_flows) {
        std::vector<std::size_t> order = fs;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            double da = spec.flows[a].demand_mbps;
            double db = spec.flows[b].demand_mbps;
            return da != db ? da < db : a < b;
        });
        double remaining = link_rate.at(li);
        std::size_t left = order.size();
        for (std::size_t fi : order) {
            double alloc = std::min(spec.flows[fi].demand_mbps,
                                    remaining / static_cast<double>(left));
            share[li][fi] = alloc;
            remaining -= alloc;
            --left;
        }
    }

    SimResult result;
    result.per_flow_throughput.resize(nflows, 0.0);
    double total_demand = 0;
    for (std::size_t fi = 0; fi < nflows; ++fi) {
        total_demand += spec.flows[fi].demand_mbps;
        double tp = spec.flows[fi].demand_mbps;
        for (int li : flow_links[fi]) {
            if (li < 0) {
                tp = 0.0;
                break;
            }
            tp = std::min(tp, share.at(li).at(fi));
        }
        result.per_flow_throughput[fi] = tp;
        result.aggregate_throughput_mbps += tp;
    }
    result.plr_proxy =
        total_demand > 0
            ? std::clamp(1.0 - result.aggregate_throughput_mbps / total_demand, 0.0, 1.0)
            : 0.0;
    return result;
}

}  // namespace wmnca
