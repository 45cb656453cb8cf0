#include "wmnca/io.hpp"

#include <json.hpp>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace wmnca {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    // avoid the two spellings of zero
    if (std::string(buf) == "-0.000000") return "0.000000";
    return buf;
}

double round_like_output(double v) { return std::strtod(format_double(v).c_str(), nullptr); }

namespace {

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(std::string("malformed JSON in ") + what);
    return j;
}

const json& field(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
    return *it;
}

long long to_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + ": expected an integer");
    return j.get<long long>();
}

double to_real(const json& j, const char* what) {
    if (!j.is_number())
        throw ParseError(std::string(what) + ": expected a number");
    return j.get<double>();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text,
                                                const std::string& expected_header,
                                                const char* what) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(std::string(what) + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header)
        throw ParseError(std::string(what) + ": expected header \"" + expected_header +
                         "\", got \"" + line + "\"");
    std::size_t cols = split_csv_line(expected_header).size();

    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != cols)
            throw ParseError(std::string(what) + ": row with " + std::to_string(fields.size()) +
                             " fields, expected " + std::to_string(cols));
        rows.push_back(std::move(fields));
    }
    return rows;
}

long long csv_int(const std::string& s, const char* what) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end == s.c_str() || *end != '\0')
        throw ParseError(std::string(what) + ": not an integer: \"" + s + "\"");
    return v;
}

double csv_real(const std::string& s, const char* what) {
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (errno != 0 || end == s.c_str() || *end != '\0')
        throw ParseError(std::string(what) + ": not a number: \"" + s + "\"");
    return v;
}

}  // namespace

std::string topology_to_json(const WmnGraph& g) {
    json nodes = json::array();
    for (const Node& n : g.nodes())
        nodes.push_back({{"id", n.id}, {"x", n.x}, {"y", n.y}, {"radios", n.radios}});
    json j{{"nodes", std::move(nodes)},
           {"tx_range_m", g.tx_range_m()},
           {"if_range_m", g.if_range_m()}};
    return j.dump(2) + "\n";
}

WmnGraph topology_from_json(const std::string& text) {
    json j = parse_json(text, "topology file");
    const json& nodes_j = field(j, "nodes", "topology file");
    if (!nodes_j.is_array()) throw ParseError("topology file: \"nodes\" must be an array");

    std::vector<Node> nodes;
    for (const json& nj : nodes_j) {
        Node n;
        n.id = static_cast<NodeId>(to_int(field(nj, "id", "topology node"), "topology node id"));
        n.x = to_real(field(nj, "x", "topology node"), "topology node x");
        n.y = to_real(field(nj, "y", "topology node"), "topology node y");
        n.radios = static_cast<int>(
            to_int(field(nj, "radios", "topology node"), "topology node radios"));
        nodes.push_back(n);
    }
    double tx = to_real(field(j, "tx_range_m", "topology file"), "tx_range_m");
    double ifr = to_real(field(j, "if_range_m", "topology file"), "if_range_m");
    try {
        return WmnGraph(std::move(nodes), tx, ifr);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("topology file: ") + e.what());
    }
}

std::string ca_to_json(const ChannelAssignment& ca, const ChannelSet& cs) {
    json assignment = json::object();
    for (const auto& [r, c] : ca.entries())
        assignment[std::to_string(r.node) + "/" + std::to_string(r.radio)] = c;
    json j{{"channels", cs.channels()}, {"assignment", std::move(assignment)}};
    return j.dump(2) + "\n";
}

std::pair<ChannelAssignment, ChannelSet> ca_from_json(const std::string& text) {
    json j = parse_json(text, "assignment file");
    const json& channels_j = field(j, "channels", "assignment file");
    if (!channels_j.is_array())
        throw ParseError("assignment file: \"channels\" must be an array");
    std::vector<ChannelId> channels;
    for (const json& cj : channels_j)
        channels.push_back(static_cast<ChannelId>(to_int(cj, "assignment file channel")));

    const json& assignment_j = field(j, "assignment", "assignment file");
    if (!assignment_j.is_object())
        throw ParseError("assignment file: \"assignment\" must be an object");

    ChannelAssignment ca;
    for (auto it = assignment_j.begin(); it != assignment_j.end(); ++it) {
        const std::string& key = it.key();
        auto slash = key.find('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 >= key.size())
            throw ParseError("assignment file: radio key must be \"node/radio\", got \"" + key +
                             "\"");
        NodeId node = static_cast<NodeId>(csv_int(key.substr(0, slash), "assignment radio key"));
        int radio = static_cast<int>(csv_int(key.substr(slash + 1), "assignment radio key"));
        if (radio < 0) throw ParseError("assignment file: negative radio index in \"" + key + "\"");
        ca.set({node, radio}, static_cast<ChannelId>(to_int(it.value(), "assignment channel")));
    }
    try {
        return {std::move(ca), ChannelSet(std::move(channels))};
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("assignment file: ") + e.what());
    }
}

std::string conflict_edges_to_csv(const ConflictGraph& cg) {
    std::string out = "link_a,link_b\n";
    for (const auto& [i, j] : cg.edges)
        out += cg.links[static_cast<std::size_t>(i)].str() + "," +
               cg.links[static_cast<std::size_t>(j)].str() + "\n";
    return out;
}

std::string conflict_summary_to_json(const ConflictGraph& cg) {
    json j{{"model", to_string(cg.model)},
           {"num_links", cg.links.size()},
           {"tid", tid(cg)}};
    return j.dump(2) + "\n";
}

std::string estimate_to_json(const CdalEstimate& est) {
    json dist = json::object();
    for (std::size_t i = 0; i < est.distribution.channels.size(); ++i)
        dist[std::to_string(est.distribution.channels[i])] = est.distribution.link_count[i];
    json j{{"cdal_cost", est.cost},
           {"distribution", std::move(dist)},
           {"pairs_with_common_channel", est.pairs_with_common_channel}};
    return j.dump(2) + "\n";
}

std::string metrics_to_csv(const std::vector<MetricsRow>& rows) {
    std::string out = "ca_label,tid_c,tid_e,cdal_cost,cdal_rule\n";
    for (const MetricsRow& r : rows)
        out += r.ca_label + "," + std::to_string(r.tid_c) + "," + std::to_string(r.tid_e) + "," +
               format_double(r.cdal_cost) + "," + r.cdal_rule + "\n";
    return out;
}

std::vector<MetricsRow> metrics_from_csv(const std::string& text) {
    auto rows = parse_csv(text, "ca_label,tid_c,tid_e,cdal_cost,cdal_rule", "metrics file");
    std::vector<MetricsRow> out;
    for (const auto& f : rows)
        out.push_back({f[0], csv_int(f[1], "metrics tid_c"), csv_int(f[2], "metrics tid_e"),
                       csv_real(f[3], "metrics cdal_cost"), f[4]});
    return out;
}

std::string sim_to_csv(const std::vector<SimRow>& rows) {
    std::string out = "ca_label,scenario,aggregate_throughput_mbps,plr_proxy\n";
    for (const SimRow& r : rows)
        out += r.ca_label + "," + std::to_string(r.scenario) + "," +
               format_double(r.aggregate_throughput_mbps) + "," + format_double(r.plr_proxy) +
               "\n";
    return out;
}

std::vector<SimRow> sim_from_csv(const std::string& text) {
    auto rows =
        parse_csv(text, "ca_label,scenario,aggregate_throughput_mbps,plr_proxy", "results file");
    std::vector<SimRow> out;
    for (const auto& f : rows)
        out.push_back({f[0], static_cast<int>(csv_int(f[1], "results scenario")),
                       csv_real(f[2], "results throughput"), csv_real(f[3], "results plr")});
    return out;
}

std::string per_flow_to_json(const FlowSpec& spec, const SimResult& result) {
    json flows = json::array();
    for (std::size_t i = 0; i < spec.flows.size(); ++i)
        flows.push_back({{"src", spec.flows[i].src},
                         {"dst", spec.flows[i].dst},
                         {"demand_mbps", spec.flows[i].demand_mbps},
                         {"throughput_mbps", result.per_flow_throughput[i]}});
    json j{{"phy_rate_mbps", spec.phy_rate_mbps},
           {"flows", std::move(flows)},
           {"aggregate_throughput_mbps", result.aggregate_throughput_mbps},
           {"plr_proxy", result.plr_proxy}};
    return j.dump(2) + "\n";
}

std::string ranking_to_csv(const std::vector<RankingRow>& rows) {
    std::string out = "estimator,performance_metric,eis,n,doc_percent\n";
    for (const RankingRow& r : rows)
        out += r.estimator + "," + r.performance_metric + "," + format_double(r.eis) + "," +
               std::to_string(r.n) + "," + format_double(r.doc_percent) + "\n";
    return out;
}

std::string discordant_to_json(const std::string& estimator, const std::string& performance_metric,
                               const DiscordanceReport& report,
                               const std::vector<std::string>& labels) {
    auto pairs_json = [](const std::vector<std::pair<std::string, std::string>>& pairs) {
        json arr = json::array();
        for (const auto& [a, b] : pairs) arr.push_back({a, b});
        return arr;
    };
    json j{{"estimator", estimator},
           {"performance_metric", performance_metric},
           {"labels", labels},
           {"eis", report.eis},
           {"total_comparisons", report.total_comparisons},
           {"doc_percent", report.doc_percent},
           {"discordant_pairs", pairs_json(report.discordant_pairs)},
           {"tied_pairs", pairs_json(report.tied_pairs)}};
    return j.dump(2) + "\n";
}

std::string plot_data_to_csv(const std::vector<std::string>& labels,
                             const std::vector<double>& metric_values,
                             const std::vector<double>& estimate_values) {
    if (labels.size() != metric_values.size() || labels.size() != estimate_values.size())
        throw std::invalid_argument("plot columns must have equal length");
    std::string out = "ca_label,metric_value,estimate_value\n";
    for (std::size_t i = 0; i < labels.size(); ++i)
        out += labels[i] + "," + format_double(metric_values[i]) + "," +
               format_double(estimate_values[i]) + "\n";
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << content;
}

}  // namespace wmnca
