#include "wmnca/ca_schemes.hpp"
#include "wmnca/cdal.hpp"
#include "wmnca/evaluation.hpp"
#include "wmnca/experiment.hpp"
#include "wmnca/flowsim.hpp"
#include "wmnca/io.hpp"
#include "wmnca/topology.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace wmnca;

namespace {

// exit codes: 0 ok, 2 bad arguments, 3 bad input data, 4 inconsistent
// experiment inputs
constexpr int kExitBadArgs = 2;
constexpr int kExitBadData = 3;
constexpr int kExitMismatch = 4;

std::pair<int, int> parse_grid(const std::string& text) {
    int rows = 0, cols = 0;
    char sep = 0, trail = 0;
    int got = std::sscanf(text.c_str(), "%d%c%d%c", &rows, &sep, &cols, &trail);
    if (got != 3 || (sep != 'x' && sep != 'X'))
        throw std::invalid_argument("invalid dimensions: --grid expects RxC, got \"" + text +
                                    "\"");
    return {rows, cols};
}

ConflictModel parse_model(const std::string& text) {
    if (text == "c" || text == "conventional") return ConflictModel::Conventional;
    if (text == "e" || text == "enhanced") return ConflictModel::Enhanced;
    throw std::invalid_argument("--model must be c or e, got \"" + text + "\"");
}

std::string label_from_path(const fs::path& path) {
    std::string stem = path.stem().string();
    if (stem.rfind("ca_", 0) == 0) stem = stem.substr(3);
    return stem;
}

WmnGraph load_topology(const fs::path& path) {
    return topology_from_json(read_text_file(path));
}

struct GridFlags {
    std::string grid = "5x5";
    double spacing = 200.0;
    int radios = 2;
    double tx_range = 250.0;
    double if_range = 500.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--grid", grid, "grid dimensions RxC")->capture_default_str();
        cmd->add_option("--spacing", spacing, "grid spacing in meters")->capture_default_str();
        cmd->add_option("--radios", radios, "radios per node")->capture_default_str();
        cmd->add_option("--tx-range", tx_range, "transmission range in meters")
            ->capture_default_str();
        cmd->add_option("--if-range", if_range, "interference range in meters")
            ->capture_default_str();
    }

    WmnGraph build() const {
        auto [rows, cols] = parse_grid(grid);
        return generate_grid(rows, cols, spacing, radios, tx_range, if_range);
    }
};

void emit(const fs::path& path, const std::string& content) {
    write_text_file(path, content);
    std::cout << "wrote " << path.string() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"wireless mesh channel-assignment analysis toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a grid topology file");
    GridFlags gen_flags;
    gen_flags.attach(gen);
    std::string gen_out = ".";
    gen->add_option("--out", gen_out, "output directory")->capture_default_str();

    // assign
    auto* assign_cmd = app.add_subcommand("assign", "produce a channel assignment");
    std::string as_topology, as_scheme = "CEN", as_model = "c", as_out = ".";
    int as_channels = 3;
    std::uint64_t as_seed = 1;
    long long as_budget = 20000;
    assign_cmd->add_option("--topology", as_topology, "topology JSON file")->required();
    assign_cmd->add_option("--channels", as_channels, "number of channels (1..M)")
        ->capture_default_str();
    assign_cmd->add_option("--scheme", as_scheme, "CEN|BFS|CLQ|MIS|OIS|GSCA")
        ->capture_default_str();
    assign_cmd->add_option("--model", as_model, "conflict model, c or e")->capture_default_str();
    assign_cmd->add_option("--seed", as_seed, "seed for randomized schemes")
        ->capture_default_str();
    assign_cmd->add_option("--budget", as_budget, "iteration/evaluation budget")
        ->capture_default_str();
    assign_cmd->add_option("--out", as_out, "output directory")->capture_default_str();

    // estimate
    auto* est = app.add_subcommand("estimate", "compute interference estimates for assignments");
    std::string est_topology, est_out = ".", est_format = "csv";
    std::vector<std::string> est_cas;
    bool est_literal_kp = false;
    est->add_option("--topology", est_topology, "topology JSON file")->required();
    est->add_option("--ca", est_cas, "assignment JSON file (repeatable)")->required();
    est->add_flag("--literal-kp", est_literal_kp,
                  "use the literal k/p increment instead of equal share");
    est->add_option("--out", est_out, "output directory")->capture_default_str();
    est->add_option("--format", est_format, "csv or json (json adds per-assignment reports)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // simulate
    auto* sim = app.add_subcommand("simulate", "run the flow-level capacity proxy");
    std::string sim_topology, sim_grid, sim_model = "e", sim_out = ".", sim_format = "csv";
    std::vector<std::string> sim_cas;
    std::vector<int> sim_scenarios;
    double sim_demand = 54.0, sim_phy = 54.0;
    sim->add_option("--topology", sim_topology, "topology JSON file")->required();
    sim->add_option("--ca", sim_cas, "assignment JSON file (repeatable)")->required();
    sim->add_option("--grid", sim_grid, "grid dimensions RxC of the topology")->required();
    sim->add_option("--scenario", sim_scenarios, "flow counts, any of 5 8 10 12")
        ->check(CLI::IsMember({5, 8, 10, 12}));
    sim->add_option("--model", sim_model, "conflict model, c or e")->capture_default_str();
    sim->add_option("--demand", sim_demand, "per-flow demand in Mbps")->capture_default_str();
    sim->add_option("--phy-rate", sim_phy, "PHY rate in Mbps")->capture_default_str();
    sim->add_option("--out", sim_out, "output directory")->capture_default_str();
    sim->add_option("--format", sim_format, "csv or json (json adds per-flow detail)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // evaluate
    auto* eval = app.add_subcommand("evaluate", "rank-agreement report from metrics and results");
    std::string eval_metrics, eval_results, eval_out = ".";
    eval->add_option("--metrics", eval_metrics, "metrics CSV file")->required();
    eval->add_option("--results", eval_results, "simulation results CSV file")->required();
    eval->add_option("--out", eval_out, "output directory")->capture_default_str();

    // run-all
    auto* all = app.add_subcommand("run-all", "full pipeline on a generated grid");
    GridFlags all_flags;
    all_flags.attach(all);
    int all_channels = 3;
    std::uint64_t all_seed = 1;
    bool all_literal_kp = false;
    std::string all_sim_model = "e", all_out, all_format = "csv";
    double all_demand = 54.0, all_phy = 54.0;
    all->add_option("--channels", all_channels, "number of channels (1..M)")
        ->capture_default_str();
    all->add_option("--seed", all_seed, "population seed")->capture_default_str();
    all->add_flag("--literal-kp", all_literal_kp,
                  "use the literal k/p increment instead of equal share");
    all->add_option("--sim-model", all_sim_model, "conflict model the simulator assumes, c or e")
        ->capture_default_str();
    all->add_option("--demand", all_demand, "per-flow demand in Mbps")->capture_default_str();
    all->add_option("--phy-rate", all_phy, "PHY rate in Mbps")->capture_default_str();
    all->add_option("--out", all_out, "output directory")->required();
    all->add_option("--format", all_format, "csv or json (json adds detail files)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadArgs;
    }

    if (gen->parsed()) {
        WmnGraph g = gen_flags.build();
        emit(fs::path(gen_out) / "topology.json", topology_to_json(g));
        return 0;
    }

    if (assign_cmd->parsed()) {
        WmnGraph g = load_topology(as_topology);
        ChannelSet cs = ChannelSet::first_n(as_channels);
        SchemeSpec spec{scheme_kind_from_string(as_scheme), parse_model(as_model), as_seed,
                        as_budget};
        ChannelAssignment ca = assign(spec, g, cs);
        emit(fs::path(as_out) / ("ca_" + spec.label() + ".json"), ca_to_json(ca, cs));
        return 0;
    }

    if (est->parsed()) {
        WmnGraph g = load_topology(est_topology);
        CdalOptions opts;
        opts.rule = est_literal_kp ? IncrementRule::LiteralKOverP : IncrementRule::EqualShare;
        const std::string rule_name = est_literal_kp ? "literal-kp" : "equal-share";

        std::vector<MetricsRow> rows;
        std::optional<ChannelSet> common_set;
        for (const std::string& ca_path : est_cas) {
            auto [ca, cs] = ca_from_json(read_text_file(ca_path));
            if (common_set && !(*common_set == cs))
                throw InputMismatchError("assignment files use different channel sets");
            if (!common_set) common_set = cs;

            MetricsRow row;
            row.ca_label = label_from_path(ca_path);
            row.tid_c = tid(build_mmcg(g, ca, ConflictModel::Conventional));
            row.tid_e = tid(build_mmcg(g, ca, ConflictModel::Enhanced));
            CdalEstimate ce;
            try {
                ce = estimate(g, ca, cs, opts);
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string(ca_path) + ": " + e.what());
            }
            row.cdal_cost = ce.cost;
            row.cdal_rule = rule_name;
            if (est_format == "json")
                emit(fs::path(est_out) / ("estimate_" + row.ca_label + ".json"),
                     estimate_to_json(ce));
            rows.push_back(std::move(row));
        }
        emit(fs::path(est_out) / "metrics.csv", metrics_to_csv(rows));
        return 0;
    }

    if (sim->parsed()) {
        WmnGraph g = load_topology(sim_topology);
        auto [rows_n, cols_n] = parse_grid(sim_grid);
        if (rows_n < 1 || cols_n < 1 ||
            static_cast<std::size_t>(rows_n) * static_cast<std::size_t>(cols_n) !=
                g.node_count())
            throw InputMismatchError("--grid does not match the topology's node count");
        ConflictModel model = parse_model(sim_model);
        if (sim_scenarios.empty()) sim_scenarios = scenario_sizes();

        std::vector<SimRow> rows;
        for (const std::string& ca_path : sim_cas) {
            auto [ca, cs] = ca_from_json(read_text_file(ca_path));
            std::string label = label_from_path(ca_path);
            for (int n : sim_scenarios) {
                FlowSpec spec = grid_flow_scenario(g, rows_n, cols_n, n, sim_demand, sim_phy);
                SimResult res = simulate(g, ca, spec, model);
                rows.push_back({label, n, res.aggregate_throughput_mbps, res.plr_proxy});
                if (sim_format == "json")
                    emit(fs::path(sim_out) /
                             ("flows_" + label + "_" + std::to_string(n) + ".json"),
                         per_flow_to_json(spec, res));
            }
        }
        emit(fs::path(sim_out) / "sim_results.csv", sim_to_csv(rows));
        return 0;
    }

    if (eval->parsed()) {
        std::vector<MetricsRow> metrics = metrics_from_csv(read_text_file(eval_metrics));
        std::vector<SimRow> results = sim_from_csv(read_text_file(eval_results));
        EvaluationOutput out;
        try {
            out = evaluate_rankings(metrics, results);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());  // file contents, not flags
        }
        emit(fs::path(eval_out) / "ranking.csv", ranking_to_csv(out.ranking));
        for (const auto& [name, content] : out.plot_csv) emit(fs::path(eval_out) / name, content);
        for (const auto& [name, content] : out.discordant_json)
            emit(fs::path(eval_out) / name, content);
        return 0;
    }

    if (all->parsed()) {
        ExperimentConfig config;
        auto [rows_n, cols_n] = parse_grid(all_flags.grid);
        config.rows = rows_n;
        config.cols = cols_n;
        config.spacing_m = all_flags.spacing;
        config.radios = all_flags.radios;
        config.tx_range_m = all_flags.tx_range;
        config.if_range_m = all_flags.if_range;
        config.num_channels = all_channels;
        config.seed = all_seed;
        config.literal_kp = all_literal_kp;
        config.demand_mbps = all_demand;
        config.phy_rate_mbps = all_phy;
        config.sim_model = parse_model(all_sim_model);
        config.out_dir = all_out;
        config.write_json_details = all_format == "json";

        RunAllResult result = run_all(config);
        std::cout << "population of " << result.population.size() << " assignments on "
                  << result.graph.node_count() << " nodes\n";
        for (const RankingRow& r : result.evaluation.ranking)
            std::cout << r.estimator << " vs " << r.performance_metric << ": eis "
                      << format_double(r.eis) << ", doc " << format_double(r.doc_percent)
                      << "%\n";
        std::cout << "wrote " << fs::path(all_out).string() << "\n";
        return 0;
    }

    return kExitBadArgs;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadData;
    } catch (const InputMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const IncompleteAssignmentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const RoutingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
