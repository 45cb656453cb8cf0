#include "wmnca/ca_schemes.hpp"
#include "wmnca/cdal.hpp"
#include "wmnca/conflict_graph.hpp"
#include "wmnca/evaluation.hpp"
#include "wmnca/experiment.hpp"
#include "wmnca/flowsim.hpp"
#include "wmnca/io.hpp"
#include "wmnca/topology.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace wmnca;

namespace {

ConflictModel model_from_string(const std::string& name) {
    if (name == "c" || name == "conventional") return ConflictModel::Conventional;
    if (name == "e" || name == "enhanced") return ConflictModel::Enhanced;
    throw std::invalid_argument("model must be 'c' or 'e', got '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "wireless mesh channel-assignment analysis core";

    py::register_exception<IncompleteAssignmentError>(m, "IncompleteAssignmentError",
                                                      PyExc_ValueError);
    py::register_exception<RoutingError>(m, "RoutingError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InputMismatchError>(m, "InputMismatchError", PyExc_ValueError);

    py::class_<WmnGraph>(m, "WmnGraph")
        .def_property_readonly("node_count", &WmnGraph::node_count)
        .def_property_readonly("total_radios", &WmnGraph::total_radios)
        .def_property_readonly("tx_range_m", &WmnGraph::tx_range_m)
        .def_property_readonly("if_range_m", &WmnGraph::if_range_m)
        .def("distance", &WmnGraph::distance, py::arg("a"), py::arg("b"))
        .def("__repr__", [](const WmnGraph& g) {
            return "<WmnGraph nodes=" + std::to_string(g.node_count()) +
                   " radios=" + std::to_string(g.total_radios()) + ">";
        });

    py::class_<ChannelSet>(m, "ChannelSet")
        .def(py::init<std::vector<ChannelId>>(), py::arg("channels"))
        .def_static("first_n", &ChannelSet::first_n, py::arg("m"))
        .def_property_readonly("channels", &ChannelSet::channels)
        .def("__len__", &ChannelSet::size)
        .def("__contains__", &ChannelSet::contains)
        .def("__repr__", [](const ChannelSet& cs) {
            std::string out = "ChannelSet([";
            for (std::size_t i = 0; i < cs.channels().size(); ++i)
                out += (i ? ", " : "") + std::to_string(cs.channels()[i]);
            return out + "])";
        });

    py::class_<ChannelAssignment>(m, "ChannelAssignment")
        .def(py::init<>())
        .def("set",
             [](ChannelAssignment& ca, NodeId node, int radio, ChannelId c) {
                 ca.set({node, radio}, c);
             },
             py::arg("node"), py::arg("radio"), py::arg("channel"))
        .def("channel",
             [](const ChannelAssignment& ca, NodeId node, int radio) {
                 return ca.channel({node, radio});
             },
             py::arg("node"), py::arg("radio"))
        .def("entries",
             [](const ChannelAssignment& ca) {
                 std::map<std::pair<NodeId, int>, ChannelId> out;
                 for (const auto& [r, c] : ca.entries()) out[{r.node, r.radio}] = c;
                 return out;
             })
        .def("__len__", [](const ChannelAssignment& ca) { return ca.entries().size(); })
        .def("__eq__", [](const ChannelAssignment& a, const ChannelAssignment& b) {
            return a == b;
        });

    m.def("generate_grid", &generate_grid, py::arg("rows"), py::arg("cols"),
          py::arg("spacing_m") = 200.0, py::arg("radios_per_node") = 2,
          py::arg("tx_range_m") = 250.0, py::arg("if_range_m") = 500.0);

    m.def("topology_to_json", &topology_to_json, py::arg("g"));
    m.def("topology_from_json", &topology_from_json, py::arg("text"));
    m.def("ca_to_json", &ca_to_json, py::arg("ca"), py::arg("cs"));
    m.def("ca_from_json", &ca_from_json, py::arg("text"));

    m.def(
        "assign",
        [](const std::string& scheme, const WmnGraph& g, const ChannelSet& cs,
           const std::string& model, std::uint64_t seed, long long budget) {
            SchemeSpec spec{scheme_kind_from_string(scheme), model_from_string(model), seed,
                            budget};
            return assign(spec, g, cs);
        },
        py::arg("scheme"), py::arg("g"), py::arg("cs"), py::arg("model") = "c",
        py::arg("seed") = 0, py::arg("budget") = 20000);

    m.def(
        "scheme_label",
        [](const std::string& scheme, const std::string& model) {
            return SchemeSpec{scheme_kind_from_string(scheme), model_from_string(model)}.label();
        },
        py::arg("scheme"), py::arg("model") = "c");

    m.def(
        "validate",
        [](const ChannelAssignment& ca, const WmnGraph& g, const ChannelSet& cs) {
            std::vector<std::string> out;
            for (const Violation& v : validate(ca, g, cs)) out.push_back(v.detail);
            return out;
        },
        py::arg("ca"), py::arg("g"), py::arg("cs"));

    m.def(
        "find_link_set",
        [](const WmnGraph& g, const ChannelAssignment& ca) {
            std::vector<std::string> out;
            for (const Link& l : find_link_set(g, ca)) out.push_back(l.str());
            return out;
        },
        py::arg("g"), py::arg("ca"));

    m.def(
        "tid",
        [](const WmnGraph& g, const ChannelAssignment& ca, const std::string& model) {
            return tid(build_mmcg(g, ca, model_from_string(model)));
        },
        py::arg("g"), py::arg("ca"), py::arg("model") = "c");

    m.def(
        "cdal_estimate",
        [](const WmnGraph& g, const ChannelAssignment& ca, const ChannelSet& cs,
           bool literal_kp) {
            CdalOptions opts;
            opts.rule = literal_kp ? IncrementRule::LiteralKOverP : IncrementRule::EqualShare;
            CdalEstimate est = estimate(g, ca, cs, opts);
            std::map<ChannelId, double> dist;
            for (std::size_t i = 0; i < est.distribution.channels.size(); ++i)
                dist[est.distribution.channels[i]] = est.distribution.link_count[i];
            return py::make_tuple(est.cost, dist, est.pairs_with_common_channel);
        },
        py::arg("g"), py::arg("ca"), py::arg("cs"), py::arg("literal_kp") = false,
        "returns (cdal_cost, {channel: link_count}, pairs_with_common_channel)");

    m.def(
        "simulate_grid",
        [](const WmnGraph& g, const ChannelAssignment& ca, int rows, int cols, int scenario,
           const std::string& model, double demand_mbps, double phy_rate_mbps) {
            FlowSpec spec = grid_flow_scenario(g, rows, cols, scenario, demand_mbps,
                                               phy_rate_mbps);
            SimResult res = simulate(g, ca, spec, model_from_string(model));
            py::dict out;
            out["aggregate_throughput_mbps"] = res.aggregate_throughput_mbps;
            out["plr_proxy"] = res.plr_proxy;
            out["per_flow_throughput"] = res.per_flow_throughput;
            return out;
        },
        py::arg("g"), py::arg("ca"), py::arg("rows"), py::arg("cols"), py::arg("scenario"),
        py::arg("model") = "e", py::arg("demand_mbps") = 54.0, py::arg("phy_rate_mbps") = 54.0);

    m.def(
        "eis_from_orders",
        [](const std::vector<std::string>& reference, const std::vector<std::string>& predicted) {
            return eis(CaSequence::from_order(reference), CaSequence::from_order(predicted));
        },
        py::arg("reference"), py::arg("predicted"),
        "Kendall-tau distance between two strict label orderings");

    m.def("doc", &doc, py::arg("eis_value"), py::arg("n"));

    m.def(
        "rank_labels",
        [](const std::map<std::string, double>& values, bool higher_is_better) {
            std::vector<std::pair<std::string, double>> v(values.begin(), values.end());
            return rank(v, higher_is_better ? Direction::HigherIsBetter
                                            : Direction::LowerIsBetter)
                .labels();
        },
        py::arg("values"), py::arg("higher_is_better"),
        "labels in ascending performance order");

    m.def(
        "run_all",
        [](int rows, int cols, int radios, int channels, std::uint64_t seed,
           const std::string& out_dir, bool literal_kp) {
            ExperimentConfig config;
            config.rows = rows;
            config.cols = cols;
            config.radios = radios;
            config.num_channels = channels;
            config.seed = seed;
            config.out_dir = out_dir;
            config.literal_kp = literal_kp;
            RunAllResult result = run_all(config);
            py::list ranking;
            for (const RankingRow& r : result.evaluation.ranking) {
                py::dict row;
                row["estimator"] = r.estimator;
                row["performance_metric"] = r.performance_metric;
                row["eis"] = r.eis;
                row["n"] = r.n;
                row["doc_percent"] = r.doc_percent;
                ranking.append(row);
            }
            return ranking;
        },
        py::arg("rows") = 5, py::arg("cols") = 5, py::arg("radios") = 2, py::arg("channels") = 3,
        py::arg("seed") = 1, py::arg("out_dir") = "", py::arg("literal_kp") = false,
        "full pipeline: population, estimates, simulation, ranking rows");
}
