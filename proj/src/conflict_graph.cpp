#include "wmnca/conflict_graph.hpp"

#include "wmnca/topology.hpp"

#include <algorithm>

namespace wmnca {

std::string to_string(ConflictModel m) {
    return m == ConflictModel::Conventional ? "conventional" : "enhanced";
}

std::vector<int> ConflictGraph::degrees() const {
    std::vector<int> deg(links.size(), 0);
    for (const auto& [i, j] : edges) {
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
    }
    return deg;
}

namespace {

bool share_radio(const Link& l1, const Link& l2) {
    return l1.uses_radio(l2.a) || l1.uses_radio(l2.b);
}

// Two links incident to one node through different radios of that node.
bool colocated_different_radios(const Link& l1, const Link& l2) {
    for (RadioId r1 : {l1.a, l1.b})
        for (RadioId r2 : {l2.a, l2.b})
            if (r1.node == r2.node && r1.radio != r2.radio) return true;
    return false;
}

bool within_if_range(const WmnGraph& g, const Link& l1, const Link& l2) {
    for (NodeId n1 : {l1.a.node, l1.b.node})
        for (NodeId n2 : {l2.a.node, l2.b.node})
            if (g.distance(n1, n2) <= g.if_range_m()) return true;
    return false;
}

}  // namespace

bool links_conflict(const WmnGraph& g, const Link& l1, const Link& l2, ConflictModel model,
                    const ConflictOptions& opts) {
    if (l1 == l2) return false;
    if (model == ConflictModel::Enhanced && colocated_different_radios(l1, l2)) return true;
    if (l1.channel != l2.channel) return false;
    if (opts.exclude_shared_radio && share_radio(l1, l2)) return false;
    return within_if_range(g, l1, l2);
}

ConflictGraph build_mmcg(const WmnGraph& g, const ChannelAssignment& ca, ConflictModel model,
                         const ConflictOptions& opts) {
    ConflictGraph cg;
    cg.model = model;
    cg.links = find_link_set(g, ca);
    const int n = static_cast<int>(cg.links.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (links_conflict(g, cg.links[static_cast<std::size_t>(i)],
                               cg.links[static_cast<std::size_t>(j)], model, opts))
                cg.edges.emplace_back(i, j);
    return cg;
}

long long tid(const ConflictGraph& cg) { return static_cast<long long>(cg.edges.size()); }

TidEvaluator::TidEvaluator(const WmnGraph& g, ConflictModel model, const ConflictOptions& opts) {
    const auto radios = g.all_radios();
    for (int k = 0; k < static_cast<int>(radios.size()); ++k)
        radio_key_.emplace(radios[static_cast<std::size_t>(k)], k);
    links_of_radio_.resize(radios.size());

    for (const auto& [i, j] : adjacent_pairs(g)) {
        const Node& ni = g.node(i);
        const Node& nj = g.node(j);
        for (int a = 0; a < ni.radios; ++a) {
            for (int b = 0; b < nj.radios; ++b) {
                int idx = static_cast<int>(plinks_.size());
                plinks_.push_back({RadioId{i, a}, RadioId{j, b}});
                links_of_radio_[static_cast<std::size_t>(radio_key_.at({i, a}))].push_back(idx);
                links_of_radio_[static_cast<std::size_t>(radio_key_.at({j, b}))].push_back(idx);
            }
        }
    }

    adj_.resize(plinks_.size());
    const int n = static_cast<int>(plinks_.size());
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            // Evaluate the predicate parts that do not depend on channels.
            Link lp{plinks_[static_cast<std::size_t>(p)].a, plinks_[static_cast<std::size_t>(p)].b, 0};
            Link lq{plinks_[static_cast<std::size_t>(q)].a, plinks_[static_cast<std::size_t>(q)].b, 0};
            bool rci = colocated_different_radios(lp, lq);
            bool conv = (!opts.exclude_shared_radio || !share_radio(lp, lq)) &&
                        within_if_range(g, lp, lq);
            std::optional<PairKind> kind;
            if (model == ConflictModel::Enhanced && rci)
                kind = PairKind::AnyChannel;
            else if (conv)
                kind = PairKind::SameChannel;
            if (kind) {
                adj_[static_cast<std::size_t>(p)].emplace_back(q, *kind);
                adj_[static_cast<std::size_t>(q)].emplace_back(p, *kind);
            }
        }
    }
}

std::vector<ChannelId> TidEvaluator::materialized(const ChannelAssignment& ca) const {
    std::vector<ChannelId> mat(plinks_.size(), -1);
    for (std::size_t k = 0; k < plinks_.size(); ++k) {
        auto ca_a = ca.channel(plinks_[k].a);
        auto ca_b = ca.channel(plinks_[k].b);
        if (!ca_a || !ca_b)
            throw IncompleteAssignmentError("assignment does not cover all radios");
        if (*ca_a < 0 || *ca_b < 0) throw std::invalid_argument("channel ids must be non-negative");
        if (*ca_a == *ca_b) mat[k] = *ca_a;
    }
    return mat;
}

namespace {
inline bool pair_has_edge(ChannelId a, ChannelId b, TidEvaluator::PairKind kind) {
    return a != -1 && b != -1 && (kind == TidEvaluator::PairKind::AnyChannel || a == b);
}
}  // namespace

long long TidEvaluator::count_edges(const std::vector<ChannelId>& mat) const {
    long long edges = 0;
    for (std::size_t p = 0; p < adj_.size(); ++p)
        for (const auto& [q, kind] : adj_[p])
            if (static_cast<int>(p) < q &&
                pair_has_edge(mat[p], mat[static_cast<std::size_t>(q)], kind))
                ++edges;
    return edges;
}

long long TidEvaluator::evaluate(const ChannelAssignment& ca) const {
    return count_edges(materialized(ca));
}

void TidEvaluator::reset(const ChannelAssignment& ca) {
    ca_ = ca;
    mat_ = materialized(ca);
    current_tid_ = count_edges(mat_);
}

long long TidEvaluator::tid_if_flipped(RadioId r, ChannelId c) const {
    auto key = radio_key_.find(r);
    if (key == radio_key_.end()) throw std::invalid_argument("unknown radio");
    const auto& affected = links_of_radio_[static_cast<std::size_t>(key->second)];

    auto is_affected = [&](int q) {
        return std::find(affected.begin(), affected.end(), q) != affected.end();
    };
    auto new_channel = [&](int p) -> ChannelId {
        const PotentialLink& pl = plinks_[static_cast<std::size_t>(p)];
        RadioId other = (pl.a == r) ? pl.b : pl.a;
        ChannelId och = *ca_.channel(other);
        return och == c ? c : -1;
    };

    long long delta = 0;
    for (int p : affected) {
        ChannelId np = new_channel(p);
        for (const auto& [q, kind] : adj_[static_cast<std::size_t>(p)]) {
            bool q_aff = is_affected(q);
            if (q_aff && q < p) continue;
            ChannelId oq = mat_[static_cast<std::size_t>(q)];
            ChannelId nq = q_aff ? new_channel(q) : oq;
            delta += pair_has_edge(np, nq, kind) - pair_has_edge(mat_[static_cast<std::size_t>(p)], oq, kind);
        }
    }
    return current_tid_ + delta;
}

void TidEvaluator::apply_flip(RadioId r, ChannelId c) {
    current_tid_ = tid_if_flipped(r, c);
    ca_.set(r, c);
    auto key = radio_key_.at(r);
    for (int p : links_of_radio_[static_cast<std::size_t>(key)]) {
        const PotentialLink& pl = plinks_[static_cast<std::size_t>(p)];
        RadioId other = (pl.a == r) ? pl.b : pl.a;
        ChannelId och = *ca_.channel(other);
        mat_[static_cast<std::size_t>(p)] = (och == c) ? c : -1;
    }
}

}  // namespace wmnca
