#include "wmnca/experiment.hpp"

#include "wmnca/cdal.hpp"
#include "wmnca/evaluation.hpp"
#include "wmnca/flowsim.hpp"
#include "wmnca/topology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wmnca {

std::vector<LabeledCa> default_population(const WmnGraph& g, const ChannelSet& cs,
                                          std::uint64_t seed) {
    std::vector<LabeledCa> population;
    for (SchemeKind kind :
         {SchemeKind::BFS, SchemeKind::CEN, SchemeKind::CLQ, SchemeKind::MIS}) {
        for (ConflictModel model : {ConflictModel::Conventional, ConflictModel::Enhanced}) {
            SchemeSpec spec{kind, model, seed};
            // CLQ rebuilds the whole conflict graph each round; a short
            // budget keeps the population cheap without changing the
            // fixed point it typically reaches much earlier.
            if (kind == SchemeKind::CLQ) spec.budget = 40;
            population.push_back({spec.label(), assign(spec, g, cs)});
        }
    }
    population.push_back(
        {"GSCA", assign(SchemeSpec{SchemeKind::GSCA, ConflictModel::Conventional, seed}, g, cs)});
    std::sort(population.begin(), population.end(),
              [](const LabeledCa& a, const LabeledCa& b) { return a.label < b.label; });
    return population;
}

namespace {

// The estimator a mixed-model study would quote per assignment: each one's
// TID under the conflict model it was planned against (GSCA and unlabeled
// assignments read as conventional).
long long native_tid(const MetricsRow& row) {
    if (row.ca_label.size() >= 2 && row.ca_label.rfind("_E") == row.ca_label.size() - 2)
        return row.tid_e;
    return row.tid_c;
}

}  // namespace

EvaluationOutput evaluate_rankings(const std::vector<MetricsRow>& metrics,
                                   const std::vector<SimRow>& sim) {
    std::set<std::string> metric_labels;
    for (const MetricsRow& r : metrics)
        if (!metric_labels.insert(r.ca_label).second)
            throw InputMismatchError("duplicate ca_label in metrics: " + r.ca_label);

    std::map<std::string, std::vector<const SimRow*>> sim_by_label;
    for (const SimRow& r : sim) sim_by_label[r.ca_label].push_back(&r);

    std::set<std::string> sim_labels;
    for (const auto& [label, rows] : sim_by_label) sim_labels.insert(label);
    if (metric_labels != sim_labels) {
        std::string detail;
        for (const std::string& l : metric_labels)
            if (!sim_labels.count(l)) detail += " " + l + " (metrics only)";
        for (const std::string& l : sim_labels)
            if (!metric_labels.count(l)) detail += " " + l + " (results only)";
        throw InputMismatchError("ca_label mismatch between metrics and results:" + detail);
    }

    // Performance = scenario averages; estimators = the metric columns.
    // Everything is rounded like the CSV emitters so file-based and
    // in-memory evaluation agree bit for bit.
    std::vector<std::pair<std::string, double>> avg_tp, avg_plr;
    for (const std::string& label : metric_labels) {
        const auto& rows = sim_by_label.at(label);
        double tp = 0, plr = 0;
        for (const SimRow* r : rows) {
            tp += round_like_output(r->aggregate_throughput_mbps);
            plr += round_like_output(r->plr_proxy);
        }
        avg_tp.emplace_back(label, round_like_output(tp / static_cast<double>(rows.size())));
        avg_plr.emplace_back(label, round_like_output(plr / static_cast<double>(rows.size())));
    }

    std::vector<std::pair<std::string, CaSequence>> performance{
        {"avg_throughput", rank(avg_tp, Direction::HigherIsBetter)},
        {"avg_plr", rank(avg_plr, Direction::LowerIsBetter)},
    };

    std::vector<std::pair<std::string, std::vector<std::pair<std::string, double>>>> estimators;
    auto column = [&](const std::string& name, auto getter) {
        std::vector<std::pair<std::string, double>> vals;
        for (const MetricsRow& r : metrics) vals.emplace_back(r.ca_label, getter(r));
        estimators.emplace_back(name, std::move(vals));
    };
    column("tid_c", [](const MetricsRow& r) { return static_cast<double>(r.tid_c); });
    column("tid_e", [](const MetricsRow& r) { return static_cast<double>(r.tid_e); });
    column("tid_native", [](const MetricsRow& r) { return static_cast<double>(native_tid(r)); });
    column("cdal_cost", [](const MetricsRow& r) { return round_like_output(r.cdal_cost); });

    std::map<std::string, std::map<std::string, double>> perf_value;
    for (const auto& [label, v] : avg_tp) perf_value["avg_throughput"][label] = v;
    for (const auto& [label, v] : avg_plr) perf_value["avg_plr"][label] = v;

    EvaluationOutput out;
    for (const auto& [est_name, est_values] : estimators) {
        CaSequence predicted = rank(est_values, Direction::LowerIsBetter);
        std::map<std::string, double> est_by_label(est_values.begin(), est_values.end());
        for (const auto& [perf_name, reference] : performance) {
            DiscordanceReport report = compare_sequences(reference, predicted);
            out.ranking.push_back({est_name, perf_name, report.eis,
                                   static_cast<int>(metric_labels.size()), report.doc_percent});

            std::vector<std::string> labels(metric_labels.begin(), metric_labels.end());
            std::vector<double> mv, ev;
            for (const std::string& l : labels) {
                mv.push_back(perf_value.at(perf_name).at(l));
                ev.push_back(est_by_label.at(l));
            }
            std::string stem = est_name + "_vs_" + perf_name;
            out.plot_csv["plot_" + stem + ".csv"] = plot_data_to_csv(labels, mv, ev);
            out.discordant_json["discordant_" + stem + ".json"] =
                discordant_to_json(est_name, perf_name, report, labels);
        }
    }
    return out;
}

namespace {

const char* kPlotScript = R"(#!/usr/bin/env python3
"""Render scatter plots from the plot_*.csv files next to this script."""
import csv
import glob
import os
import sys

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit("matplotlib is required to render the plots")

here = os.path.dirname(os.path.abspath(__file__))
for path in sorted(glob.glob(os.path.join(here, "plot_*.csv"))):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        continue
    xs = [float(r["estimate_value"]) for r in rows]
    ys = [float(r["metric_value"]) for r in rows]
    labels = [r["ca_label"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter(xs, ys)
    for x, y, label in zip(xs, ys, labels):
        ax.annotate(label, (x, y), fontsize=7, xytext=(3, 3), textcoords="offset points")
    stem = os.path.splitext(os.path.basename(path))[0]
    est, _, metric = stem[len("plot_"):].partition("_vs_")
    ax.set_xlabel(est)
    ax.set_ylabel(metric)
    fig.tight_layout()
    out = os.path.join(here, stem + ".png")
    fig.savefig(out, dpi=150)
    plt.close(fig)
    print(out)
)";

}  // namespace

RunAllResult run_all(const ExperimentConfig& config) {
    WmnGraph g = generate_grid(config.rows, config.cols, config.spacing_m, config.radios,
                               config.tx_range_m, config.if_range_m);
    ChannelSet cs = ChannelSet::first_n(config.num_channels);
    std::vector<LabeledCa> population = default_population(g, cs, config.seed);

    CdalOptions cdal_opts;
    cdal_opts.rule = config.literal_kp ? IncrementRule::LiteralKOverP : IncrementRule::EqualShare;
    const std::string rule_name = config.literal_kp ? "literal-kp" : "equal-share";

    std::vector<MetricsRow> metrics;
    for (const LabeledCa& item : population) {
        MetricsRow row;
        row.ca_label = item.label;
        row.tid_c = tid(build_mmcg(g, item.ca, ConflictModel::Conventional));
        row.tid_e = tid(build_mmcg(g, item.ca, ConflictModel::Enhanced));
        row.cdal_cost = estimate(g, item.ca, cs, cdal_opts).cost;
        row.cdal_rule = rule_name;
        metrics.push_back(std::move(row));
    }

    std::vector<SimRow> sim_rows;
    for (const LabeledCa& item : population) {
        for (int n : config.scenarios) {
            FlowSpec spec = grid_flow_scenario(g, config.rows, config.cols, n,
                                               config.demand_mbps, config.phy_rate_mbps);
            SimResult res = simulate(g, item.ca, spec, config.sim_model);
            sim_rows.push_back({item.label, n, res.aggregate_throughput_mbps, res.plr_proxy});
        }
    }

    EvaluationOutput evaluation = evaluate_rankings(metrics, sim_rows);

    if (!config.out_dir.empty()) {
        const auto& dir = config.out_dir;
        write_text_file(dir / "topology.json", topology_to_json(g));
        for (const LabeledCa& item : population)
            write_text_file(dir / ("ca_" + item.label + ".json"), ca_to_json(item.ca, cs));
        write_text_file(dir / "metrics.csv", metrics_to_csv(metrics));
        write_text_file(dir / "sim_results.csv", sim_to_csv(sim_rows));
        write_text_file(dir / "ranking.csv", ranking_to_csv(evaluation.ranking));
        for (const auto& [name, content] : evaluation.plot_csv)
            write_text_file(dir / name, content);
        for (const auto& [name, content] : evaluation.discordant_json)
            write_text_file(dir / name, content);
        write_text_file(dir / "plots.py", kPlotScript);
        if (config.write_json_details) {
            for (const LabeledCa& item : population) {
                for (int n : config.scenarios) {
                    FlowSpec spec = grid_flow_scenario(g, config.rows, config.cols, n,
                                                       config.demand_mbps, config.phy_rate_mbps);
                    SimResult res = simulate(g, item.ca, spec, config.sim_model);
                    write_text_file(dir / ("flows_" + item.label + "_" + std::to_string(n) +
                                           ".json"),
                                    per_flow_to_json(spec, res));
                }
            }
        }
    }

    return {std::move(g), std::move(population), std::move(metrics), std::move(sim_rows),
            std::move(evaluation)};
}

}  // namespace wmnca
