#pragma once

#include <cstddef>

#include "vermins/engine.hpp"
#include "vermins/network.hpp"

namespace vermins {

enum class OracleMethod { dijkstra, brute_force };

struct ExactResult {
    Route route;
    double length = 0.0;
    OracleMethod method = OracleMethod::dijkstra;
};

// Total Euclidean length of a route. Requires coordinates mode and a valid route.
double route_length(const Route& route, const Network& net);

// Minimum-total-length route via Dijkstra; ties broken toward the
// lexicographically smallest path.
ExactResult exact_shortest_route(const Network& net);

// Independent oracle: enumerate all simple routes and take the minimum.
ExactResult brute_force_shortest(const Network& net,
                                 std::size_t max_routes = kDefaultMaxRoutes);

} // namespace vermins
