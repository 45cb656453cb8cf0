#pragma once

#include "wmnca/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace wmnca {

enum class ConflictModel { Conventional, Enhanced };

std::string to_string(ConflictModel m);

struct ConflictOptions {
    /// Links that use the same radio cannot be active at once; that is a
    /// scheduling constraint rather than interference, so such pairs are
    /// left out of the conflict graph by default.
    bool exclude_shared_radio = true;
};

/// Link conflict graph: vertices are the links of a LinkSet, edges are
/// potential interference conflicts between them.
struct ConflictGraph {
    ConflictModel model{ConflictModel::Conventional};
    std::vector<Link> links;                    // vertices, canonical order
    std::vector<std::pair<int, int>> edges;     // i < j, sorted, unique

    std::vector<int> degrees() const;
};

/// Pairwise conflict predicate.
/// Conventional: same channel, no shared radio (when excluded), and some
/// endpoint of one link within if_range_m of some endpoint of the other.
/// Enhanced: conventional conflicts plus co-located-radio conflicts — two
/// links incident to one node through different radios of that node
/// conflict regardless of channel.
bool links_conflict(const WmnGraph& g, const Link& l1, const Link& l2, ConflictModel model,
                    const ConflictOptions& opts = {});

ConflictGraph build_mmcg(const WmnGraph& g, const ChannelAssignment& ca, ConflictModel model,
                         const ConflictOptions& opts = {});

/// TID: the conflict graph's edge count, equal to half the sum of the
/// links' interference degrees.
long long tid(const ConflictGraph& cg);

/// Precomputed structure for repeated TID evaluation over channel
/// assignments on a fixed graph. Enumerates every potential link (adjacent
/// node pair x radio pair) once and caches which pairs can conflict; a TID
/// query then only has to look at channels. Agrees with
/// tid(build_mmcg(...)) on every assignment.
class TidEvaluator {
  public:
    TidEvaluator(const WmnGraph& g, ConflictModel model, const ConflictOptions& opts = {});

    long long evaluate(const ChannelAssignment& ca) const;

    /// Stateful interface for local search over single-radio flips.
    void reset(const ChannelAssignment& ca);
    long long current() const { return current_tid_; }
    long long tid_if_flipped(RadioId r, ChannelId c) const;
    void apply_flip(RadioId r, ChannelId c);
    const ChannelAssignment& assignment() const { return ca_; }

    /// Potential links (channel-free). SameChannel pairs conflict only when
    /// both links carry the same channel, AnyChannel pairs whenever both
    /// links exist.
    struct PotentialLink {
        RadioId a, b;  // a.node < b.node
    };
    enum class PairKind : std::uint8_t { SameChannel, AnyChannel };
    const std::vector<PotentialLink>& potential_links() const { return plinks_; }
    const std::vector<std::vector<std::pair<int, PairKind>>>& pair_adjacency() const {
        return adj_;
    }

  private:
    std::vector<ChannelId> materialized(const ChannelAssignment& ca) const;
    long long count_edges(const std::vector<ChannelId>& mat) const;

    std::vector<PotentialLink> plinks_;
    std::vector<std::vector<std::pair<int, PairKind>>> adj_;   // per potential link
    std::vector<std::vector<int>> links_of_radio_;             // radio key -> plink indices
    std::map<RadioId, int> radio_key_;

    ChannelAssignment ca_;
    std::vector<ChannelId> mat_;  // channel per potential link, -1 when absent
    long long current_tid_ = 0;
};

}  // namespace wmnca
