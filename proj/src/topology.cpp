#include "wmnca/topology.hpp"

#include <algorithm>

namespace wmnca {

WmnGraph generate_grid(int rows, int cols, double spacing_m, int radios_per_node,
                       double tx_range_m, double if_range_m) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("invalid dimensions: grid must be at least 1x1");
    if (!(spacing_m > 0)) throw std::invalid_argument("invalid dimensions: spacing must be positive");
    if (radios_per_node < 1) throw std::invalid_argument("radios per node must be >= 1");

    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            nodes.push_back({r * cols + c, c * spacing_m, r * spacing_m, radios_per_node});
    return WmnGraph(std::move(nodes), tx_range_m, if_range_m);
}

std::map<NodeId, std::set<NodeId>> adjacency(const WmnGraph& g) {
    std::map<NodeId, std::set<NodeId>> adj;
    for (const Node& n : g.nodes()) adj[n.id];
    const auto& nodes = g.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (g.distance(nodes[i].id, nodes[j].id) <= g.tx_range_m()) {
                adj[nodes[i].id].insert(nodes[j].id);
                adj[nodes[j].id].insert(nodes[i].id);
            }
        }
    }
    return adj;
}

std::vector<std::pair<NodeId, NodeId>> adjacent_pairs(const WmnGraph& g) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    const auto& nodes = g.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (g.distance(nodes[i].id, nodes[j].id) <= g.tx_range_m())
                pairs.emplace_back(nodes[i].id, nodes[j].id);
    return pairs;
}

LinkSet find_link_set(const WmnGraph& g, const ChannelAssignment& ca) {
    for (const Node& n : g.nodes())
        for (int r = 0; r < n.radios; ++r)
            if (!ca.channel({n.id, r}))
                throw IncompleteAssignmentError("radio " + std::to_string(n.id) + "/" +
                                                std::to_string(r) + " has no channel");

    LinkSet links;
    for (const auto& [i, j] : adjacent_pairs(g)) {
        const Node& ni = g.node(i);
        const Node& nj = g.node(j);
        for (int a = 0; a < ni.radios; ++a) {
            ChannelId ca_i = *ca.channel({i, a});
            for (int b = 0; b < nj.radios; ++b) {
                if (ca_i == *ca.channel({j, b}))
                    links.push_back(Link::make({i, a}, {j, b}, ca_i));
            }
        }
    }
    std::sort(links.begin(), links.end());
    return links;
}

}  // namespace wmnca
