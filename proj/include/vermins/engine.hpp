#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "vermins/network.hpp"

namespace vermins {

inline constexpr std::size_t kDefaultMaxRoutes = 1'000'000;

/// Binary node-incidence vector of a route, paired with its ordered path.
struct RouteVector {
    std::vector<std::uint8_t> incidence;
    Route route;
    bool operator==(const RouteVector&) const = default;
};

/// Per-node distances from the ideal route; source and sink entries are 0.
struct WeightVector {
    std::vector<double> weights;
    bool operator==(const WeightVector&) const = default;
};

struct VerminsResult {
    RouteVector winner;
    double criterion_value = 0.0; // W*
    std::size_t q = 0;            // extracted route vectors
    std::size_t h = 0;            // eliminated by dominance
    std::vector<double> survivor_values;
    std::vector<RouteVector> survivors;
    std::vector<Route> ties; // all routes sharing the minimum
    bool operator==(const VerminsResult&) const = default;
};

WeightVector weight_vector(const Network& net);

// Every simple source->sink path, DFS order with ascending neighbor index.
// Throws NoRouteError when none exists, BudgetExceededError past max_routes.
std::vector<RouteVector> enumerate_route_vectors(const Network& net,
                                                 std::size_t max_routes = kDefaultMaxRoutes);

// True iff a's support is a strict subset of b's.
bool dominates(const RouteVector& a, const RouteVector& b);

// Survivors (input order preserved) and the eliminated count h.
std::pair<std::vector<RouteVector>, std::size_t>
prune_dominated(const std::vector<RouteVector>& vectors);

double criterion(const RouteVector& p, const WeightVector& w);

VerminsResult vermins_solve(const Network& net, std::size_t max_routes = kDefaultMaxRoutes);

} // namespace vermins
