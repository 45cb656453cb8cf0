#include "wmnca/cdal.hpp"

#include "wmnca/topology.hpp"

#include <algorithm>
#include <cmath>

namespace wmnca {

double ChannelDistribution::at(ChannelId c) const {
    for (std::size_t i = 0; i < channels.size(); ++i)
        if (channels[i] == c) return link_count[i];
    throw std::invalid_argument("channel " + std::to_string(c) + " not in distribution");
}

double ChannelDistribution::total_mass() const {
    double sum = 0;
    for (double v : link_count) sum += v;
    return sum;
}

std::set<ChannelId> common_channels(const WmnGraph& g, const ChannelAssignment& ca, NodeId i,
                                    NodeId j) {
    if (i == j || g.distance(i, j) > g.tx_range_m())
        throw std::invalid_argument("nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                    " are not adjacent");
    std::set<ChannelId> ch_i = ca.channels_at(i);
    std::set<ChannelId> ch_j = ca.channels_at(j);
    std::set<ChannelId> common;
    std::set_intersection(ch_i.begin(), ch_i.end(), ch_j.begin(), ch_j.end(),
                          std::inserter(common, common.begin()));
    return common;
}

ChannelDistribution prob_channel_select(const WmnGraph& g, const ChannelAssignment& ca,
                                        const ChannelSet& cs, const CdalOptions& opts) {
    if (!ca.covers(g)) throw IncompleteAssignmentError("assignment does not cover all radios");

    ChannelDistribution cd;
    cd.channels = cs.channels();
    cd.link_count.assign(cd.channels.size(), 0.0);

    for (const auto& [i, j] : adjacent_pairs(g)) {
        std::set<ChannelId> common = common_channels(g, ca, i, j);
        if (common.empty()) continue;
        const double p = static_cast<double>(common.size());
        const double visits = (opts.pairs == PairIteration::Ordered) ? 2.0 : 1.0;
        for (ChannelId k : common) {
            auto idx = cs.index_of(k);
            if (!idx)
                throw std::invalid_argument("assigned channel " + std::to_string(k) +
                                            " is outside the channel set");
            double inc = (opts.rule == IncrementRule::LiteralKOverP)
                             ? static_cast<double>(k) / p
                             : 1.0 / p;
            cd.link_count[*idx] += visits * inc;
        }
    }
    return cd;
}

double cdal_cost(const ChannelDistribution& cd) {
    const std::size_t m = cd.link_count.size();
    if (m == 0) throw std::invalid_argument("distribution must cover at least one channel");
    double mean = 0;
    for (double v : cd.link_count) mean += v;
    mean /= static_cast<double>(m);
    double ss = 0;
    for (double v : cd.link_count) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(m));
}

CdalEstimate estimate(const WmnGraph& g, const ChannelAssignment& ca, const ChannelSet& cs,
                      const CdalOptions& opts) {
    CdalEstimate est;
    est.distribution = prob_channel_select(g, ca, cs, opts);
    est.cost = cdal_cost(est.distribution);
    int pairs = 0;
    for (const auto& [i, j] : adjacent_pairs(g))
        if (!common_channels(g, ca, i, j).empty()) ++pairs;
    est.pairs_with_common_channel = pairs;
    return est;
}

}  // namespace wmnca
