#include "vermins/lab.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <string>

#include <json.hpp>

#include "vermins/errors.hpp"
#include "vermins/geometry.hpp"
#include "vermins/numfmt.hpp"

namespace vermins {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kGeneratorRetries = 64;

bool reaches_sink(const Network& net) {
    std::vector<char> seen(net.node_count(), 0);
    std::queue<int> q;
    q.push(net.source());
    seen[net.source()] = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (u == net.sink())
            return true;
        for (int v : net.out_neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                q.push(v);
            }
    }
    return false;
}

} // namespace

Network random_geometric_network(const GeneratorConfig& config) {
    if (config.n < 2 || config.dim < 1 || !(config.connect_radius > 0.0))
        throw ValidationError("generator config: need n >= 2, dim >= 1, connect_radius > 0");

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
        std::vector<Point> pts(config.n);
        for (auto& p : pts) {
            p.coords.resize(config.dim);
            for (double& c : p.coords)
                c = unit(rng);
        }

        int source = 0, sink = 0;
        for (int i = 1; i < config.n; ++i) {
            if (pts[i].coords[0] < pts[source].coords[0]) source = i;
            if (pts[i].coords[0] > pts[sink].coords[0]) sink = i;
        }
        if (source == sink)
            continue; // all first coordinates equal; redraw

        // Projection onto the source->sink axis orders the layered orientation.
        std::vector<double> proj(config.n, 0.0);
        if (config.directed_layered) {
            for (int i = 0; i < config.n; ++i)
                for (int d = 0; d < config.dim; ++d)
                    proj[i] += (pts[i].coords[d] - pts[source].coords[d]) *
                               (pts[sink].coords[d] - pts[source].coords[d]);
        }

        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < config.n; ++i)
            for (int j = i + 1; j < config.n; ++j) {
                if (euclidean_distance(pts[i], pts[j]) > config.connect_radius)
                    continue;
                if (config.directed_layered && proj[j] < proj[i])
                    edges.emplace_back(j, i);
                else
                    edges.emplace_back(i, j);
            }

        std::vector<NodeRecord> nodes(config.n);
        for (int i = 0; i < config.n; ++i) {
            nodes[i].id = i;
            nodes[i].point = pts[i];
        }

        Network net = build_network(std::move(nodes), std::move(edges),
                                    config.directed_layered, source, sink);
        if (reaches_sink(net))
            return net;
    }
    throw Error("could not generate a connected network after " +
                std::to_string(kGeneratorRetries) +
                " attempts; try a larger connect_radius");
}

ComparisonRecord compare(const Network& net, std::size_t max_routes) {
    if (net.mode() != WeightMode::coordinates)
        throw CoordinatesRequiredError("compare requires coordinates");

    const VerminsResult heur = vermins_solve(net, max_routes);
    const ExactResult exact = exact_shortest_route(net);

    ComparisonRecord rec;
    rec.network_digest = network_digest(net);
    rec.heuristic_route = heur.winner.route;
    rec.heuristic_length = route_length(heur.winner.route, net);
    rec.heuristic_criterion = heur.criterion_value;
    rec.exact_route = exact.route;
    rec.exact_length = exact.length;
    rec.gap = rec.heuristic_length - rec.exact_length;
    rec.agree = rec.gap <= 1e-9;
    return rec;
}

SearchReport search_counterexamples(const GeneratorConfig& base_config, std::size_t trials,
                                    std::size_t max_routes) {
    if (trials < 1)
        throw ValidationError("trials must be >= 1");

    SearchReport report;
    report.base_config = base_config;
    report.trials = trials;
    double gap_sum = 0.0;

    for (std::size_t t = 0; t < trials; ++t) {
        GeneratorConfig cfg = base_config;
        cfg.seed = base_config.seed + t;
        ComparisonRecord rec;
        try {
            const Network net = random_geometric_network(cfg);
            rec = compare(net, max_routes);
        } catch (const Error& e) {
            report.skipped.push_back({cfg.seed, e.what()});
            continue;
        }
        ++report.completed;
        gap_sum += rec.gap;
        report.max_gap = std::max(report.max_gap, rec.gap);
        if (!rec.agree) {
            ++report.counterexamples;
            report.seeds_of_failures.push_back(cfg.seed);
            if (!report.first_counterexample) {
                report.first_counterexample = rec;
                report.first_counterexample_config = cfg;
            }
        }
    }
    report.mean_gap = report.completed ? gap_sum / static_cast<double>(report.completed) : 0.0;
    return report;
}

namespace {

ordered_json config_to_json(const GeneratorConfig& c) {
    ordered_json j;
    j["n"] = c.n;
    j["dim"] = c.dim;
    j["connect_radius"] = round12(c.connect_radius);
    j["directed_layered"] = c.directed_layered;
    j["seed"] = c.seed;
    return j;
}

GeneratorConfig config_from_json(const ordered_json& j) {
    GeneratorConfig c;
    c.n = j.at("n").get<int>();
    c.dim = j.at("dim").get<int>();
    c.connect_radius = j.at("connect_radius").get<double>();
    c.directed_layered = j.at("directed_layered").get<bool>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

ordered_json record_to_json(const ComparisonRecord& r) {
    ordered_json j;
    j["network_digest"] = r.network_digest;
    j["heuristic_route"] = r.heuristic_route.path;
    j["heuristic_length"] = round12(r.heuristic_length);
    j["heuristic_criterion"] = round12(r.heuristic_criterion);
    j["exact_route"] = r.exact_route.path;
    j["exact_length"] = round12(r.exact_length);
    j["agree"] = r.agree;
    j["gap"] = round12(r.gap);
    return j;
}

ComparisonRecord record_from_json(const ordered_json& j) {
    ComparisonRecord r;
    r.network_digest = j.at("network_digest").get<std::string>();
    r.heuristic_route.path = j.at("heuristic_route").get<std::vector<int>>();
    r.heuristic_length = j.at("heuristic_length").get<double>();
    r.heuristic_criterion = j.at("heuristic_criterion").get<double>();
    r.exact_route.path = j.at("exact_route").get<std::vector<int>>();
    r.exact_length = j.at("exact_length").get<double>();
    r.agree = j.at("agree").get<bool>();
    r.gap = j.at("gap").get<double>();
    return r;
}

} // namespace

std::string serialize_report(const SearchReport& report) {
    ordered_json j;
    j["base_config"] = config_to_json(report.base_config);
    j["trials"] = report.trials;
    j["completed"] = report.completed;
    j["counterexamples"] = report.counterexamples;
    j["mean_gap"] = round12(report.mean_gap);
    j["max_gap"] = round12(report.max_gap);
    j["seeds_of_failures"] = report.seeds_of_failures;
    j["skipped"] = ordered_json::array();
    for (const auto& s : report.skipped) {
        ordered_json js;
        js["seed"] = s.seed;
        js["reason"] = s.reason;
        j["skipped"].push_back(std::move(js));
    }
    if (report.first_counterexample) {
        ordered_json jf;
        jf["config"] = config_to_json(*report.first_counterexample_config);
        jf["record"] = record_to_json(*report.first_counterexample);
        j["first_counterexample"] = std::move(jf);
    } else {
        j["first_counterexample"] = nullptr;
    }
    return j.dump(2) + "\n";
}

SearchReport parse_report(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid report: ") + e.what());
    }
    SearchReport r;
    try {
        r.base_config = config_from_json(j.at("base_config"));
        r.trials = j.at("trials").get<std::size_t>();
        r.completed = j.at("completed").get<std::size_t>();
        r.counterexamples = j.at("counterexamples").get<std::size_t>();
        r.mean_gap = j.at("mean_gap").get<double>();
        r.max_gap = j.at("max_gap").get<double>();
        r.seeds_of_failures = j.at("seeds_of_failures").get<std::vector<std::uint64_t>>();
        for (const auto& js : j.at("skipped"))
            r.skipped.push_back({js.at("seed").get<std::uint64_t>(),
                                 js.at("reason").get<std::string>()});
        const auto& jf = j.at("first_counterexample");
        if (!jf.is_null()) {
            r.first_counterexample_config = config_from_json(jf.at("config"));
            r.first_counterexample = record_from_json(jf.at("record"));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid report: ") + e.what());
    }
    return r;
}

} // namespace vermins
