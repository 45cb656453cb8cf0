#pragma once

#include "wmnca/types.hpp"

#include <set>
#include <vector>

namespace wmnca {

/// CD: per-channel fractional link-counts, one entry for every channel of
/// the channel set (zeros included).
struct ChannelDistribution {
    std::vector<ChannelId> channels;   // channel-set order
    std::vector<double> link_count;    // aligned with channels

    double at(ChannelId c) const;
    double total_mass() const;
};

/// The printed k/p increment is kept available for comparison; the
/// equal-share 1/p rule is the default (see prob_channel_select).
enum class IncrementRule { EqualShare, LiteralKOverP };

/// Visiting ordered pairs (i,j) and (j,i) doubles every entry; rankings by
/// cdal_cost are identical either way. Unordered is the default.
enum class PairIteration { Unordered, Ordered };

struct CdalOptions {
    IncrementRule rule = IncrementRule::EqualShare;
    PairIteration pairs = PairIteration::Unordered;
};

/// ComCh_ij: channels common to the radios of adjacent nodes i and j.
/// Set semantics; multiplicity on one node is ignored.
std::set<ChannelId> common_channels(const WmnGraph& g, const ChannelAssignment& ca, NodeId i,
                                    NodeId j);

/// Probabilistic link selection: every adjacent pair with p = |ComCh| > 0
/// common channels spreads one unit of link mass equally, 1/p per common
/// channel. Pairs without a common channel contribute nothing.
ChannelDistribution prob_channel_select(const WmnGraph& g, const ChannelAssignment& ca,
                                        const ChannelSet& cs, const CdalOptions& opts = {});

/// Population standard deviation of the distribution entries,
/// sqrt(sum((cd_k - mean)^2) / M). Throws on an empty distribution.
double cdal_cost(const ChannelDistribution& cd);

struct CdalEstimate {
    double cost{};
    ChannelDistribution distribution;
    int pairs_with_common_channel{};
};

CdalEstimate estimate(const WmnGraph& g, const ChannelAssignment& ca, const ChannelSet& cs,
                      const CdalOptions& opts = {});

}  // namespace wmnca
