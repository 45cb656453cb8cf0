#pragma once

#include "wmnca/conflict_graph.hpp"
#include "wmnca/types.hpp"

#include <stdexcept>
#include <vector>

namespace wmnca {

struct Flow {
    NodeId src{};
    NodeId dst{};
    double demand_mbps{};

    auto operator<=>(const Flow&) const = default;
};

struct FlowSpec {
    std::vector<Flow> flows;
    double phy_rate_mbps{54.0};
};

struct SimResult {
    std::vector<double> per_flow_throughput;  // indexed like FlowSpec::flows
    double aggregate_throughput_mbps{};
    double plr_proxy{};  // 1 - aggregate / total demand
};

struct RoutingError : std::runtime_error {
    explicit RoutingError(const std::string& what) : std::runtime_error(what) {}
};

/// Candidate multi-hop flows for a rows x cols grid, in fixed order: row
/// flows top to bottom (first node to last node of the row), column flows
/// left to right, then the two diagonals. Flows whose endpoints are less
/// than two hops apart in g are dropped; g must be the matching grid.
std::vector<Flow> grid_flows(const WmnGraph& g, int rows, int cols, double demand_mbps);

/// First n_flows of grid_flows. Throws std::invalid_argument when the grid
/// has fewer qualifying flows than requested.
FlowSpec grid_flow_scenario(const WmnGraph& g, int rows, int cols, int n_flows,
                            double demand_mbps = 54.0, double phy_rate_mbps = 54.0);

/// The four standard scenario sizes.
inline const std::vector<int>& scenario_sizes() {
    static const std::vector<int> sizes{5, 8, 10, 12};
    return sizes;
}

/// All four standard scenarios; throws when the grid cannot host them all.
std::vector<FlowSpec> grid_flow_scenarios(const WmnGraph& g, int rows, int cols,
                                          double demand_mbps = 54.0,
                                          double phy_rate_mbps = 54.0);

/// Minimum-hop node path from src to dst, ties broken toward the
/// lexicographically smallest node sequence. Throws RoutingError when no
/// path exists.
std::vector<NodeId> shortest_path(const WmnGraph& g, NodeId src, NodeId dst);

/// Flow-level capacity proxy. Routes every flow on its shortest path, maps
/// each hop to the least-loaded common-channel link, discounts each used
/// link's rate by its active conflict-graph neighbors, then water-fills
/// each link's rate among its flows; a flow's throughput is the minimum
/// share across its hops (zero when some hop has no common channel).
SimResult simulate(const WmnGraph& g, const ChannelAssignment& ca, const FlowSpec& spec,
                   ConflictModel model);

}  // namespace wmnca
