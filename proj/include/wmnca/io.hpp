#pragma once

#include "wmnca/cdal.hpp"
#include "wmnca/conflict_graph.hpp"
#include "wmnca/evaluation.hpp"
#include "wmnca/flowsim.hpp"
#include "wmnca/types.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace wmnca {

/// Raised on malformed or semantically invalid input files.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Fixed-format float used in every CSV/JSON we emit, so identical runs
/// produce byte-identical files.
std::string format_double(double v);
/// The value format_double(v) prints, as a double (round half away from zero).
double round_like_output(double v);

// topology file: { "nodes": [{"id","x","y","radios"}], "tx_range_m", "if_range_m" }
std::string topology_to_json(const WmnGraph& g);
WmnGraph topology_from_json(const std::string& text);

// channel assignment file: { "channels": [...], "assignment": {"node/radio": channel} }
std::string ca_to_json(const ChannelAssignment& ca, const ChannelSet& cs);
std::pair<ChannelAssignment, ChannelSet> ca_from_json(const std::string& text);

// conflict graph exports
std::string conflict_edges_to_csv(const ConflictGraph& cg);
std::string conflict_summary_to_json(const ConflictGraph& cg);

// interference estimate report
std::string estimate_to_json(const CdalEstimate& est);

// one row per labeled assignment, both interference estimates
struct MetricsRow {
    std::string ca_label;
    long long tid_c{};
    long long tid_e{};
    double cdal_cost{};
    std::string cdal_rule;  // "equal-share" or "literal-kp"
};
std::string metrics_to_csv(const std::vector<MetricsRow>& rows);
std::vector<MetricsRow> metrics_from_csv(const std::string& text);

// one row per (labeled assignment, scenario)
struct SimRow {
    std::string ca_label;
    int scenario{};
    double aggregate_throughput_mbps{};
    double plr_proxy{};
};
std::string sim_to_csv(const std::vector<SimRow>& rows);
std::vector<SimRow> sim_from_csv(const std::string& text);

std::string per_flow_to_json(const FlowSpec& spec, const SimResult& result);

// rank-agreement report rows: estimator vs performance metric
struct RankingRow {
    std::string estimator;
    std::string performance_metric;
    double eis{};
    int n{};  // number of ranked assignments
    double doc_percent{};
};
std::string ranking_to_csv(const std::vector<RankingRow>& rows);

std::string discordant_to_json(const std::string& estimator, const std::string& performance_metric,
                               const DiscordanceReport& report,
                               const std::vector<std::string>& labels);

/// Two-column plot data (observed metric value, estimate value, label).
std::string plot_data_to_csv(const std::vector<std::string>& labels,
                             const std::vector<double>& metric_values,
                             const std::vector<double>& estimate_values);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace wmnca
