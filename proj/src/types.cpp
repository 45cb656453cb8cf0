#include "wmnca/types.hpp"

#include <algorithm>
#include <cmath>

namespace wmnca {

WmnGraph::WmnGraph(std::vector<Node> nodes, double tx_range_m, double if_range_m)
    : nodes_(std::move(nodes)), tx_range_m_(tx_range_m), if_range_m_(if_range_m) {
    if (nodes_.empty()) throw std::invalid_argument("graph needs at least one node");
    if (!(tx_range_m_ > 0)) throw std::invalid_argument("tx_range_m must be positive");
    if (if_range_m_ < tx_range_m_)
        throw std::invalid_argument("if_range_m must be >= tx_range_m");

    std::sort(nodes_.begin(), nodes_.end(),
              [](const Node& l, const Node& r) { return l.id < r.id; });
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        if (n.radios < 1) throw std::invalid_argument("every node needs >= 1 radio");
        if (!index_.emplace(n.id, i).second)
            throw std::invalid_argument("duplicate node id " + std::to_string(n.id));
    }
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        for (std::size_t j = i + 1; j < nodes_.size(); ++j)
            if (nodes_[i].x == nodes_[j].x && nodes_[i].y == nodes_[j].y)
                throw std::invalid_argument("node positions must be unique");
}

int WmnGraph::total_radios() const {
    int total = 0;
    for (const Node& n : nodes_) total += n.radios;
    return total;
}

bool WmnGraph::has_node(NodeId id) const { return index_.count(id) > 0; }

const Node& WmnGraph::node(NodeId id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw std::invalid_argument("unknown node id " + std::to_string(id));
    return nodes_[it->second];
}

double WmnGraph::distance(NodeId a, NodeId b) const {
    const Node& na = node(a);
    const Node& nb = node(b);
    return std::hypot(na.x - nb.x, na.y - nb.y);
}

std::vector<RadioId> WmnGraph::all_radios() const {
    std::vector<RadioId> out;
    out.reserve(static_cast<std::size_t>(total_radios()));
    for (const Node& n : nodes_)
        for (int r = 0; r < n.radios; ++r) out.push_back({n.id, r});
    return out;
}

bool WmnGraph::operator==(const WmnGraph& other) const {
    if (tx_range_m_ != other.tx_range_m_ || if_range_m_ != other.if_range_m_) return false;
    if (nodes_.size() != other.nodes_.size()) return false;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& l = nodes_[i];
        const Node& r = other.nodes_[i];
        if (l.id != r.id || l.x != r.x || l.y != r.y || l.radios != r.radios) return false;
    }
    return true;
}

ChannelSet::ChannelSet(std::vector<ChannelId> channels) : channels_(std::move(channels)) {
    if (channels_.empty()) throw std::invalid_argument("channel set must be non-empty");
    // ascending order makes every "lowest channel id" tie-break a plain
    // first-hit scan over channels()
    std::sort(channels_.begin(), channels_.end());
    if (std::adjacent_find(channels_.begin(), channels_.end()) != channels_.end())
        throw std::invalid_argument("channel set entries must be distinct");
    for (ChannelId c : channels_)
        if (c < 0) throw std::invalid_argument("channel ids must be non-negative");
}

ChannelSet ChannelSet::first_n(int m) {
    if (m < 1) throw std::invalid_argument("channel set size must be >= 1");
    std::vector<ChannelId> ch(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) ch[static_cast<std::size_t>(i)] = i + 1;
    return ChannelSet(std::move(ch));
}

bool ChannelSet::contains(ChannelId c) const {
    return std::find(channels_.begin(), channels_.end(), c) != channels_.end();
}

std::optional<std::size_t> ChannelSet::index_of(ChannelId c) const {
    auto it = std::find(channels_.begin(), channels_.end(), c);
    if (it == channels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - channels_.begin());
}

std::optional<ChannelId> ChannelAssignment::channel(RadioId r) const {
    auto it = assignment_.find(r);
    if (it == assignment_.end()) return std::nullopt;
    return it->second;
}

std::set<ChannelId> ChannelAssignment::channels_at(NodeId node) const {
    std::set<ChannelId> out;
    for (auto it = assignment_.lower_bound({node, 0});
         it != assignment_.end() && it->first.node == node; ++it)
        out.insert(it->second);
    return out;
}

bool ChannelAssignment::covers(const WmnGraph& g) const {
    for (const Node& n : g.nodes())
        for (int r = 0; r < n.radios; ++r)
            if (!assignment_.count({n.id, r})) return false;
    return true;
}

Link Link::make(RadioId x, RadioId y, ChannelId c) {
    if (x.node == y.node)
        throw std::invalid_argument("link endpoints must be on distinct nodes");
    if (y < x) std::swap(x, y);
    return Link{x, y, c};
}

int Link::radio_at(NodeId n) const {
    if (a.node == n) return a.radio;
    if (b.node == n) return b.radio;
    throw std::invalid_argument("link does not touch node " + std::to_string(n));
}

std::string Link::str() const {
    return std::to_string(a.node) + "/" + std::to_string(a.radio) + "-" +
           std::to_string(b.node) + "/" + std::to_string(b.radio) + ":" +
           std::to_string(channel);
}

}  // namespace wmnca
