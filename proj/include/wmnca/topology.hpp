#pragma once

#include "wmnca/types.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace wmnca {

/// Build a rows x cols lattice with node id = row * cols + col placed at
/// (col * spacing_m, row * spacing_m), radios_per_node radios each.
WmnGraph generate_grid(int rows, int cols, double spacing_m, int radios_per_node,
                       double tx_range_m, double if_range_m);

/// Adj_i for every node: j is adjacent to i iff i != j and their distance
/// is <= tx_range_m. Symmetric by construction.
std::map<NodeId, std::set<NodeId>> adjacency(const WmnGraph& g);

/// Unordered adjacent node pairs (i < j), sorted.
std::vector<std::pair<NodeId, NodeId>> adjacent_pairs(const WmnGraph& g);

/// LS: one link per (adjacent node pair, radio pair) whose radios share a
/// channel. Sorted canonically. Throws IncompleteAssignmentError when a
/// radio of g has no channel.
LinkSet find_link_set(const WmnGraph& g, const ChannelAssignment& ca);

}  // namespace wmnca
