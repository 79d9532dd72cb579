#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vermins/engine.hpp"
#include "vermins/errors.hpp"
#include "vermins/lab.hpp"
#include "vermins/network.hpp"
#include "vermins/numfmt.hpp"
#include "vermins/oracle.hpp"

using namespace vermins;
using ordered_json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 ok, 2 parse/flags, 3 no route or invalid route, 4 budget
// exceeded, 5 coordinates required, 10 counterexample found.
enum ExitCode {
    kOk = 0,
    kFailure = 1,
    kParse = 2,
    kNoRoute = 3,
    kBudget = 4,
    kNeedsCoordinates = 5,
    kCounterexample = 10,
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Network load_network(const std::string& path, std::optional<bool> directed_override) {
    Network net = parse_network(read_file(path));
    if (!directed_override || *directed_override == net.directed())
        return net;
    auto edges = net.edges();
    if (!*directed_override) {
        // Directed pairs may collapse when the orientation is dropped.
        std::set<std::pair<int, int>> canon;
        for (auto& [a, b] : edges)
            canon.insert({std::min(a, b), std::max(a, b)});
        edges.assign(canon.begin(), canon.end());
    }
    return build_network(net.nodes(), edges, *directed_override, net.source(), net.sink());
}

ordered_json path_json(const Route& r) {
    return ordered_json(r.path);
}

std::string path_text(const Route& r) {
    std::string s;
    for (std::size_t i = 0; i < r.path.size(); ++i) {
        if (i) s += "->";
        s += std::to_string(r.path[i]);
    }
    return s;
}

struct CommonFlags {
    std::size_t max_routes = kDefaultMaxRoutes;
    std::string format = "json";
    bool force_directed = false;
    bool force_undirected = false;

    std::optional<bool> directed_override() const {
        if (force_directed) return true;
        if (force_undirected) return false;
        return std::nullopt;
    }
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_budget = true) {
    if (with_budget)
        cmd->add_option("--max-routes", f.max_routes, "Simple-path enumeration budget")
            ->check(CLI::PositiveNumber);
    cmd->add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    auto* d = cmd->add_flag("--directed", f.force_directed, "Treat the network as directed");
    cmd->add_flag("--undirected", f.force_undirected, "Treat the network as undirected")
        ->excludes(d);
}

void print_solve_table(const Network& net, const VerminsResult& res) {
    const WeightVector w = weight_vector(net);
    std::printf("W = [");
    for (int i = 0; i < net.node_count(); ++i)
        std::printf("%s%s", i ? " " : "", fmt_real(w.weights[i]).c_str());
    std::printf("]\n\n");
    std::printf("%-6s %-*s %-12s %s\n", "route", net.node_count() * 2 + 1, "incidence",
                "criterion", "path");
    for (std::size_t t = 0; t < res.survivors.size(); ++t) {
        const auto& rv = res.survivors[t];
        std::string inc = "[";
        for (std::size_t i = 0; i < rv.incidence.size(); ++i) {
            if (i) inc += ' ';
            inc += rv.incidence[i] ? '1' : '0';
        }
        inc += ']';
        std::printf("P%-5zu %s %-12s %s\n", t + 1, inc.c_str(),
                    fmt_real(res.survivor_values[t]).c_str(), path_text(rv.route).c_str());
    }
    std::printf("\nq = %zu extracted, h = %zu eliminated by dominance\n", res.q, res.h);
    std::printf("W* = %s, linear-most route: %s\n", fmt_real(res.criterion_value).c_str(),
                path_text(res.winner.route).c_str());
}

int cmd_solve(const std::string& file, const CommonFlags& flags, bool table) {
    const Network net = load_network(file, flags.directed_override());
    const VerminsResult res = vermins_solve(net, flags.max_routes);
    if (table || flags.format == "table") {
        print_solve_table(net, res);
        return kOk;
    }
    ordered_json j;
    j["winner"] = path_json(res.winner.route);
    j["criterion"] = round12(res.criterion_value);
    j["q"] = res.q;
    j["h"] = res.h;
    j["survivors"] = ordered_json::array();
    for (std::size_t i = 0; i < res.survivors.size(); ++i) {
        ordered_json js;
        js["path"] = path_json(res.survivors[i].route);
        js["value"] = round12(res.survivor_values[i]);
        j["survivors"].push_back(std::move(js));
    }
    j["ties"] = ordered_json::array();
    for (const auto& r : res.ties)
        j["ties"].push_back(path_json(r));
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_matrix(const std::string& file, const CommonFlags& flags, bool undirected_view) {
    const Network net = load_network(file, flags.directed_override());
    ConnectivityMatrix m = connectivity_matrix(net);
    if (undirected_view)
        m = symmetrized(m);
    std::cout << m.to_text();
    return kOk;
}

int cmd_exact(const std::string& file, const CommonFlags& flags, bool brute_force) {
    const Network net = load_network(file, flags.directed_override());
    const ExactResult res = brute_force ? brute_force_shortest(net, flags.max_routes)
                                        : exact_shortest_route(net);
    if (flags.format == "table") {
        std::printf("method: %s\n", res.method == OracleMethod::dijkstra ? "dijkstra" : "brute_force");
        std::printf("route:  %s\n", path_text(res.route).c_str());
        std::printf("length: %s\n", fmt_real(res.length).c_str());
        return kOk;
    }
    ordered_json j;
    j["method"] = res.method == OracleMethod::dijkstra ? "dijkstra" : "brute_force";
    j["path"] = path_json(res.route);
    j["length"] = round12(res.length);
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_compare(const std::string& file, const CommonFlags& flags) {
    const Network net = load_network(file, flags.directed_override());
    const ComparisonRecord rec = compare(net, flags.max_routes);
    if (flags.format == "table") {
        std::printf("heuristic: %s  length %s  criterion %s\n",
                    path_text(rec.heuristic_route).c_str(),
                    fmt_real(rec.heuristic_length).c_str(),
                    fmt_real(rec.heuristic_criterion).c_str());
        std::printf("exact:     %s  length %s\n", path_text(rec.exact_route).c_str(),
                    fmt_real(rec.exact_length).c_str());
        std::printf("agree: %s  gap: %s\n", rec.agree ? "yes" : "no",
                    fmt_real(rec.gap).c_str());
    } else {
        ordered_json j;
        j["network_digest"] = rec.network_digest;
        j["heuristic_route"] = path_json(rec.heuristic_route);
        j["heuristic_length"] = round12(rec.heuristic_length);
        j["heuristic_criterion"] = round12(rec.heuristic_criterion);
        j["exact_route"] = path_json(rec.exact_route);
        j["exact_length"] = round12(rec.exact_length);
        j["agree"] = rec.agree;
        j["gap"] = round12(rec.gap);
        std::cout << j.dump(2) << "\n";
    }
    return rec.agree ? kOk : kCounterexample;
}

int cmd_search(const GeneratorConfig& cfg, std::size_t trials, std::size_t max_routes,
               const std::string& out_file) {
    const SearchReport report = search_counterexamples(cfg, trials, max_routes);
    const std::string text = serialize_report(report);
    if (!out_file.empty()) {
        std::ofstream out(out_file, std::ios::binary);
        if (!out)
            throw Error("cannot write report to " + out_file);
        out << text;
        std::printf("trials=%zu counterexamples=%zu max_gap=%s\n", report.trials,
                    report.counterexamples, fmt_real(report.max_gap).c_str());
    } else {
        std::cout << text;
        std::fprintf(stderr, "trials=%zu counterexamples=%zu max_gap=%s\n", report.trials,
                     report.counterexamples, fmt_real(report.max_gap).c_str());
    }
    return report.counterexamples == 0 ? kOk : kCounterexample;
}

int cmd_dot(const std::string& file, const CommonFlags& flags, const std::string& route_arg) {
    const Network net = load_network(file, flags.directed_override());

    std::optional<Route> highlight;
    if (!route_arg.empty()) {
        Route r;
        std::stringstream ss(route_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                r.path.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError("invalid --route node: " + tok);
            }
        }
        try {
            validate_route(r, net);
        } catch (const ValidationError& e) {
            throw NoRouteError(std::string("invalid --route: ") + e.what()); // exit 3
        }
        highlight = std::move(r);
    }

    auto on_route = [&](int a, int b) {
        if (!highlight)
            return false;
        const auto& p = highlight->path;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if ((p[i] == a && p[i + 1] == b) ||
                (!net.directed() && p[i] == b && p[i + 1] == a))
                return true;
        return false;
    };

    std::ostringstream out;
    out << (net.directed() ? "digraph network {\n" : "graph network {\n");
    out << "  node [shape=circle];\n";
    for (const auto& rec : net.nodes()) {
        out << "  " << rec.id;
        if (rec.point) {
            const double x = rec.point->coords[0];
            const double y = rec.point->dim() > 1 ? rec.point->coords[1] : 0.0;
            out << " [pos=\"" << fmt_real(x) << "," << fmt_real(y) << "!\"]";
        }
        out << ";\n";
    }
    const char* arrow = net.directed() ? " -> " : " -- ";
    for (const auto& [a, b] : net.edges()) {
        out << "  " << a << arrow << b;
        if (on_route(a, b))
            out << " [color=red, penwidth=2.0]";
        out << ";\n";
    }
    out << "}\n";
    std::cout << out.str();
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"VeRMinS shortest-route heuristic, exact oracle and conjecture lab"};
    app.require_subcommand(1);

    std::string file;
    CommonFlags flags;
    bool table = false, undirected_view = false, brute_force = false;
    std::string route_arg, out_file;

    auto* solve = app.add_subcommand("solve", "Run the heuristic on a network file");
    solve->add_option("file", file, "Network file")->required();
    add_common(solve, flags);
    solve->add_flag("--table", table, "Human-readable table output");

    auto* matrix = app.add_subcommand("matrix", "Print the connectivity matrix");
    matrix->add_option("file", file, "Network file")->required();
    add_common(matrix, flags, /*with_budget=*/false);
    matrix->add_flag("--undirected-view", undirected_view, "Render the symmetric matrix");

    auto* exact = app.add_subcommand("exact", "Exact Euclidean shortest route");
    exact->add_option("file", file, "Network file")->required();
    add_common(exact, flags);
    exact->add_flag("--brute-force", brute_force, "Use the enumeration oracle");

    auto* comp = app.add_subcommand("compare", "Heuristic vs exact oracle");
    comp->add_option("file", file, "Network file")->required();
    add_common(comp, flags);

    GeneratorConfig cfg;
    std::size_t trials = 100;
    auto* search = app.add_subcommand("search", "Randomized counterexample search");
    search->add_option("--n", cfg.n, "Nodes per instance")->check(CLI::Range(2, 1 << 20));
    search->add_option("--dim", cfg.dim, "Dimension")->check(CLI::PositiveNumber);
    search->add_option("--radius", cfg.connect_radius, "Connection radius")
        ->check(CLI::PositiveNumber);
    search->add_option("--trials", trials, "Trial count")->check(CLI::PositiveNumber);
    search->add_option("--seed", cfg.seed, "Base seed");
    search->add_flag("--directed-layered", cfg.directed_layered,
                     "Orient edges along the source->sink axis");
    search->add_option("--max-routes", flags.max_routes, "Per-trial enumeration budget")
        ->check(CLI::PositiveNumber);
    search->add_option("--out", out_file, "Report output file");

    auto* dot = app.add_subcommand("dot", "Export the network as a DOT diagram");
    dot->add_option("file", file, "Network file")->required();
    add_common(dot, flags, /*with_budget=*/false);
    dot->add_option("--route", route_arg, "Comma-separated path to highlight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }

    try {
        if (solve->parsed()) return cmd_solve(file, flags, table);
        if (matrix->parsed()) return cmd_matrix(file, flags, undirected_view);
        if (exact->parsed()) return cmd_exact(file, flags, brute_force);
        if (comp->parsed()) return cmd_compare(file, flags);
        if (search->parsed()) return cmd_search(cfg, trials, flags.max_routes, out_file);
        if (dot->parsed()) return cmd_dot(file, flags, route_arg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse; // the network file parsed but is not a valid model
    } catch (const NoRouteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNoRoute;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const CoordinatesRequiredError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNeedsCoordinates;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
