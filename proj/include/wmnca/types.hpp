#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace wmnca {

using NodeId = int;
using ChannelId = int;

/// Identifies one radio as (owning node, radio index within that node).
struct RadioId {
    NodeId node{};
    int radio{};

    auto operator<=>(const RadioId&) const = default;
};

struct Node {
    NodeId id{};
    double x{};
    double y{};
    int radios{};
};

/// Mesh backbone graph: nodes with planar positions, per-node radio counts,
/// and the two protocol-model radii. Immutable after construction.
class WmnGraph {
  public:
    WmnGraph(std::vector<Node> nodes, double tx_range_m, double if_range_m);

    const std::vector<Node>& nodes() const { return nodes_; }
    double tx_range_m() const { return tx_range_m_; }
    double if_range_m() const { return if_range_m_; }

    std::size_t node_count() const { return nodes_.size(); }
    int total_radios() const;

    bool has_node(NodeId id) const;
    const Node& node(NodeId id) const;
    double distance(NodeId a, NodeId b) const;

    /// All radios in canonical (node, radio index) order.
    std::vector<RadioId> all_radios() const;

    bool operator==(const WmnGraph& other) const;

  private:
    std::vector<Node> nodes_;  // sorted by id
    std::map<NodeId, std::size_t> index_;
    double tx_range_m_{};
    double if_range_m_{};
};

/// Distinct channel identifiers, kept sorted ascending.
class ChannelSet {
  public:
    explicit ChannelSet(std::vector<ChannelId> channels);

    /// Channels {1, 2, ..., m}.
    static ChannelSet first_n(int m);

    const std::vector<ChannelId>& channels() const { return channels_; }
    std::size_t size() const { return channels_.size(); }
    bool contains(ChannelId c) const;
    std::optional<std::size_t> index_of(ChannelId c) const;

    bool operator==(const ChannelSet& other) const { return channels_ == other.channels_; }

  private:
    std::vector<ChannelId> channels_;
};

/// Map from radio to its assigned channel.
class ChannelAssignment {
  public:
    ChannelAssignment() = default;

    void set(RadioId r, ChannelId c) { assignment_[r] = c; }
    std::optional<ChannelId> channel(RadioId r) const;
    const std::map<RadioId, ChannelId>& entries() const { return assignment_; }

    /// Ch_i: set of channels carried by node i's radios.
    std::set<ChannelId> channels_at(NodeId node) const;

    /// True when every radio of every node in g has a channel.
    bool covers(const WmnGraph& g) const;

    bool operator==(const ChannelAssignment&) const = default;
    auto operator<=>(const ChannelAssignment&) const = default;

  private:
    std::map<RadioId, ChannelId> assignment_;
};

/// Radio-level wireless link: two radios on distinct nodes sharing a channel.
/// Endpoints are stored with a.node < b.node so links compare canonically.
struct Link {
    RadioId a{};
    RadioId b{};
    ChannelId channel{};

    static Link make(RadioId x, RadioId y, ChannelId c);

    bool uses_radio(RadioId r) const { return a == r || b == r; }
    bool touches(NodeId n) const { return a.node == n || b.node == n; }

    /// Radio index used at node n; requires touches(n).
    int radio_at(NodeId n) const;

    std::string str() const;

    auto operator<=>(const Link&) const = default;
};

using LinkSet = std::vector<Link>;  // kept sorted in canonical order

/// Raised when an operation needs a complete channel assignment and one
/// or more radios have none.
struct IncompleteAssignmentError : std::runtime_error {
    explicit IncompleteAssignmentError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wmnca
