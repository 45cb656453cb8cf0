#pragma once

#include "wmnca/conflict_graph.hpp"
#include "wmnca/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wmnca {

enum class SchemeKind { CEN, BFS, CLQ, MIS, OIS, GSCA };

SchemeKind scheme_kind_from_string(const std::string& name);
std::string to_string(SchemeKind kind);

struct SchemeSpec {
    SchemeKind kind{SchemeKind::CEN};
    /// Conflict graph model the scheme plans against. Ignored by GSCA
    /// (which always minimizes the conventional TID) and by CEN.
    ConflictModel conflict_model{ConflictModel::Conventional};
    std::uint64_t seed{0};
    /// Iteration cap for CLQ, evaluation cap for OIS/GSCA.
    long long budget{20000};

    /// CA label of the form KIND_C / KIND_E (plain "GSCA").
    std::string label() const;
};

/// Produce a complete channel assignment for g. Pure function of
/// (spec, g, cs): identical inputs give identical output.
ChannelAssignment assign(const SchemeSpec& spec, const WmnGraph& g, const ChannelSet& cs);

struct Violation {
    enum class Kind { UnassignedRadio, ChannelOutOfSet, UnknownRadio };
    Kind kind{};
    std::string detail;
};

/// Diagnostics, not exceptions: reports radios without a channel and
/// assigned channels outside the channel set.
std::vector<Violation> validate(const ChannelAssignment& ca, const WmnGraph& g,
                                const ChannelSet& cs);

}  // namespace wmnca
