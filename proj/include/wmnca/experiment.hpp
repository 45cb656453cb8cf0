#pragma once

#include "wmnca/ca_schemes.hpp"
#include "wmnca/io.hpp"
#include "wmnca/types.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace wmnca {

/// Raised when experiment inputs disagree with each other (e.g. metrics
/// and simulation files labeled differently).
struct InputMismatchError : std::runtime_error {
    explicit InputMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct LabeledCa {
    std::string label;
    ChannelAssignment ca;
};

/// The nine-assignment study population: BFS/CEN/CLQ/MIS, each planned
/// against both conflict models, plus GSCA. Sorted by label.
std::vector<LabeledCa> default_population(const WmnGraph& g, const ChannelSet& cs,
                                          std::uint64_t seed);

struct ExperimentConfig {
    int rows{5};
    int cols{5};
    double spacing_m{200.0};
    int radios{2};
    int num_channels{3};
    double tx_range_m{250.0};
    double if_range_m{500.0};
    std::uint64_t seed{1};
    bool literal_kp{false};
    double demand_mbps{54.0};
    double phy_rate_mbps{54.0};
    std::vector<int> scenarios{5, 8, 10, 12};
    /// Model the simulated "observed" runs assume. Enhanced by default:
    /// co-located radios do interfere in the reality the simulator stands
    /// in for, whatever model an assignment was planned against.
    ConflictModel sim_model{ConflictModel::Enhanced};
    std::filesystem::path out_dir;
    bool write_json_details{false};
};

/// Rank-agreement evaluation of every estimator column against every
/// simulated performance metric. Values are first rounded exactly like the
/// CSV emitters round them, so evaluating written files reproduces this.
struct EvaluationOutput {
    std::vector<RankingRow> ranking;
    std::map<std::string, std::string> plot_csv;         // file name -> content
    std::map<std::string, std::string> discordant_json;  // file name -> content
};
EvaluationOutput evaluate_rankings(const std::vector<MetricsRow>& metrics,
                                   const std::vector<SimRow>& sim);

struct RunAllResult {
    WmnGraph graph;
    std::vector<LabeledCa> population;
    std::vector<MetricsRow> metrics;
    std::vector<SimRow> sim;
    EvaluationOutput evaluation;
};

/// The whole pipeline: grid, population, estimates, simulations, ranking
/// reports. Writes every artifact into config.out_dir unless it is empty.
RunAllResult run_all(const ExperimentConfig& config);

}  // namespace wmnca
