#include "vermins/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vermins/errors.hpp"
#include "vermins/geometry.hpp"

namespace vermins {

WeightVector weight_vector(const Network& net) {
    const int n = net.node_count();
    WeightVector w;
    w.weights.assign(n, 0.0);
    if (net.mode() == WeightMode::explicit_weights) {
        for (int i = 0; i < n; ++i)
            w.weights[i] = net.explicit_weight(i);
    } else {
        const Point& src = net.point(net.source());
        const Point& snk = net.point(net.sink());
        for (int i = 0; i < n; ++i)
            w.weights[i] = perpendicular_distance(net.point(i), src, snk);
    }
    // A route must reach both endpoints before length matters.
    w.weights[net.source()] = 0.0;
    w.weights[net.sink()] = 0.0;
    return w;
}

namespace {

RouteVector make_route_vector(const std::vector<int>& path, int n) {
    RouteVector rv;
    rv.incidence.assign(n, 0);
    rv.route.path = path;
    for (int v : path)
        rv.incidence[v] = 1;
    return rv;
}

void dfs_paths(const Network& net, int u, std::vector<int>& path,
               std::vector<char>& on_path, std::size_t max_routes,
               std::vector<RouteVector>& out) {
    if (u == net.sink()) {
        if (out.size() >= max_routes)
            throw BudgetExceededError("route enumeration exceeded the budget of " +
                                      std::to_string(max_routes) + " routes");
        out.push_back(make_route_vector(path, net.node_count()));
        return;
    }
    for (int v : net.out_neighbors(u)) {
        if (on_path[v])
            continue;
        on_path[v] = 1;
        path.push_back(v);
        dfs_paths(net, v, path, on_path, max_routes, out);
        path.pop_back();
        on_path[v] = 0;
    }
}

} // namespace

std::vector<RouteVector> enumerate_route_vectors(const Network& net, std::size_t max_routes) {
    if (max_routes == 0)
        throw ValidationError("max_routes must be positive");
    std::vector<RouteVector> out;
    std::vector<int> path{net.source()};
    std::vector<char> on_path(net.node_count(), 0);
    on_path[net.source()] = 1;
    dfs_paths(net, net.source(), path, on_path, max_routes, out);
    if (out.empty())
        throw NoRouteError("no effective route: source and sink are not connected");
    return out;
}

bool dominates(const RouteVector& a, const RouteVector& b) {
    if (a.incidence.size() != b.incidence.size())
        throw DimensionMismatchError("incidence vectors differ in length");
    bool strict = false;
    for (std::size_t i = 0; i < a.incidence.size(); ++i) {
        if (a.incidence[i] && !b.incidence[i])
            return false;
        if (!a.incidence[i] && b.incidence[i])
            strict = true;
    }
    return strict;
}

std::pair<std::vector<RouteVector>, std::size_t>
prune_dominated(const std::vector<RouteVector>& vectors) {
    std::vector<RouteVector> survivors;
    std::size_t eliminated = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < vectors.size() && !dominated; ++j)
            dominated = (j != i) && dominates(vectors[j], vectors[i]);
        if (dominated)
            ++eliminated;
        else
            survivors.push_back(vectors[i]);
    }
    return {std::move(survivors), eliminated};
}

double criterion(const RouteVector& p, const WeightVector& w) {
    if (p.incidence.size() != w.weights.size())
        throw DimensionMismatchError("route vector and weight vector differ in length");
    double s = 0.0;
    for (std::size_t i = 0; i < w.weights.size(); ++i)
        if (p.incidence[i])
            s += w.weights[i];
    return s;
}

VerminsResult vermins_solve(const Network& net, std::size_t max_routes) {
    const WeightVector w = weight_vector(net);
    const std::vector<RouteVector> all = enumerate_route_vectors(net, max_routes);
    auto [survivors, h] = prune_dominated(all);

    VerminsResult res;
    res.q = all.size();
    res.h = h;
    res.survivor_values.reserve(survivors.size());
    for (const auto& rv : survivors)
        res.survivor_values.push_back(criterion(rv, w));

    const double best =
        *std::min_element(res.survivor_values.begin(), res.survivor_values.end());
    std::size_t winner_idx = survivors.size();
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        if (std::abs(res.survivor_values[i] - best) <= 1e-9) {
            res.ties.push_back(survivors[i].route);
            if (winner_idx == survivors.size() ||
                survivors[i].route.path < survivors[winner_idx].route.path)
                winner_idx = i;
        }
    }
    std::sort(res.ties.begin(), res.ties.end(),
              [](const Route& a, const Route& b) { return a.path < b.path; });
    res.winner = survivors[winner_idx];
    res.criterion_value = best;
    res.survivors = std::move(survivors);
    return res;
}

} // namespace vermins
