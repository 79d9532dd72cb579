#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vermins/engine.hpp"
#include "vermins/network.hpp"
#include "vermins/oracle.hpp"

namespace vermins {

struct GeneratorConfig {
    int n = 2;
    int dim = 2;
    double connect_radius = 1.0;
    bool directed_layered = false;
    std::uint64_t seed = 0;
    bool operator==(const GeneratorConfig&) const = default;
};

/// One heuristic-vs-oracle trial; positive gap certifies a counterexample.
struct ComparisonRecord {
    std::string network_digest;
    Route heuristic_route;
    double heuristic_length = 0.0;
    double heuristic_criterion = 0.0; // W*
    Route exact_route;
    double exact_length = 0.0;
    bool agree = true;
    double gap = 0.0;
    bool operator==(const ComparisonRecord&) const = default;
};

struct SkippedTrial {
    std::uint64_t seed = 0;
    std::string reason;
    bool operator==(const SkippedTrial&) const = default;
};

struct SearchReport {
    GeneratorConfig base_config;
    std::size_t trials = 0;
    std::size_t completed = 0;
    std::size_t counterexamples = 0;
    std::optional<GeneratorConfig> first_counterexample_config;
    std::optional<ComparisonRecord> first_counterexample;
    double mean_gap = 0.0;
    double max_gap = 0.0;
    std::vector<std::uint64_t> seeds_of_failures;
    std::vector<SkippedTrial> skipped;
};

// n points uniform in the unit hypercube, radius graph, source/sink at the
// extreme first coordinates. Deterministic per config.
Network random_geometric_network(const GeneratorConfig& config);

ComparisonRecord compare(const Network& net, std::size_t max_routes = kDefaultMaxRoutes);

// Trials run on seeds base, base+1, ...; every failing seed is recorded so a
// counterexample is reproducible from the report alone.
SearchReport search_counterexamples(const GeneratorConfig& base_config, std::size_t trials,
                                    std::size_t max_routes = kDefaultMaxRoutes);

std::string serialize_report(const SearchReport& report);
SearchReport parse_report(const std::string& text);

} // namespace vermins
