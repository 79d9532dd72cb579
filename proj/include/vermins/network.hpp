#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vermins/geometry.hpp"

namespace vermins {

struct NodeRecord {
    int id = 0;
    std::optional<Point> point;
    std::optional<double> explicit_weight;
};

enum class WeightMode { coordinates, explicit_weights };

/// An ordered simple path from source to sink.
struct Route {
    std::vector<int> path;
    bool operator==(const Route&) const = default;
};

/// Immutable validated network: nodes 0..m, edge set, source/sink designation.
class Network {
public:
    Network(std::vector<NodeRecord> nodes, std::vector<std::pair<int, int>> edges,
            bool directed, int source, int sink);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    bool directed() const { return directed_; }
    int source() const { return source_; }
    int sink() const { return sink_; }
    WeightMode mode() const { return mode_; }

    const std::vector<NodeRecord>& nodes() const { return nodes_; }
    // Canonical edge list: undirected edges stored as (min,max), sorted ascending.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const Point& point(int i) const { return *nodes_[i].point; }
    double explicit_weight(int i) const { return *nodes_[i].explicit_weight; }

    // Successors honoring directedness, ascending node index.
    const std::vector<int>& out_neighbors(int i) const { return out_[i]; }
    // Predecessors honoring directedness (equals out_neighbors when undirected).
    const std::vector<int>& in_neighbors(int i) const { return in_[i]; }

    bool has_edge(int from, int to) const;

private:
    std::vector<NodeRecord> nodes_;
    std::vector<std::pair<int, int>> edges_;
    bool directed_;
    int source_;
    int sink_;
    WeightMode mode_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

struct ConnectivityMatrix {
    int n = 0;
    std::vector<std::uint8_t> entries; // row-major, n*n

    std::uint8_t at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
    // Rows of space-separated 0/1 values, one per line.
    std::string to_text() const;
};

Network build_network(std::vector<NodeRecord> nodes, std::vector<std::pair<int, int>> edges,
                      bool directed, int source, int sink);

ConnectivityMatrix connectivity_matrix(const Network& net);
ConnectivityMatrix symmetrized(const ConnectivityMatrix& m);

// Canonical text format. parse rejects unknown keys, duplicate ids and
// duplicate edges; serialize emits a canonical byte stream.
Network parse_network(const std::string& text);
std::string serialize_network(const Network& net);

// FNV-1a over the canonical serialization, as a hex string.
std::string network_digest(const Network& net);

// Independent route validator: endpoints, simplicity, edge connectivity.
void validate_route(const Route& route, const Network& net);

} // namespace vermins
