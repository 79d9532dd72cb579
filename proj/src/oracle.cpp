#include "vermins/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "vermins/errors.hpp"
#include "vermins/geometry.hpp"

namespace vermins {

namespace {

void require_coordinates(const Network& net) {
    if (net.mode() != WeightMode::coordinates)
        throw CoordinatesRequiredError("oracle requires coordinates");
}

constexpr double kRelaxEps = 1e-12;

} // namespace

double route_length(const Route& route, const Network& net) {
    require_coordinates(net);
    validate_route(route, net);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < route.path.size(); ++i)
        total += euclidean_distance(net.point(route.path[i]), net.point(route.path[i + 1]));
    return total;
}

ExactResult exact_shortest_route(const Network& net) {
    require_coordinates(net);
    const int n = net.node_count();
    const double inf = std::numeric_limits<double>::infinity();

    // Distance-to-sink over reversed edges; a plain forward Dijkstra would
    // not give the lexicographic tie rule directly.
    std::vector<double> dist(n, inf);
    dist[net.sink()] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0.0, net.sink());
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u])
            continue;
        for (int v : net.in_neighbors(u)) {
            const double nd = d + euclidean_distance(net.point(u), net.point(v));
            if (nd < dist[v] - kRelaxEps) {
                dist[v] = nd;
                pq.emplace(nd, v);
            }
        }
    }
    if (dist[net.source()] == inf)
        throw NoRouteError("no effective route: source and sink are not connected");

    // Greedy walk: the smallest-index successor that stays on a shortest path
    // yields the lexicographically smallest optimal route.
    ExactResult res;
    res.method = OracleMethod::dijkstra;
    int u = net.source();
    res.route.path.push_back(u);
    while (u != net.sink()) {
        int next = -1;
        for (int v : net.out_neighbors(u)) {
            if (dist[v] == inf)
                continue;
            const double via = euclidean_distance(net.point(u), net.point(v)) + dist[v];
            if (std::abs(via - dist[u]) <= kRelaxEps * std::max(1.0, dist[u])) {
                next = v;
                break;
            }
        }
        if (next == -1)
            throw Error("internal: shortest-path reconstruction failed");
        res.route.path.push_back(next);
        u = next;
    }
    res.length = route_length(res.route, net);
    return res;
}

ExactResult brute_force_shortest(const Network& net, std::size_t max_routes) {
    require_coordinates(net);
    const auto routes = enumerate_route_vectors(net, max_routes);
    ExactResult res;
    res.method = OracleMethod::brute_force;
    bool first = true;
    for (const auto& rv : routes) {
        const double len = route_length(rv.route, net);
        if (first || len < res.length - kRelaxEps ||
            (std::abs(len - res.length) <= kRelaxEps && rv.route.path < res.route.path)) {
            res.route = rv.route;
            res.length = len;
            first = false;
        }
    }
    return res;
}

} // namespace vermins
