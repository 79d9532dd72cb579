#include "vermins/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include <json.hpp>

#include "vermins/errors.hpp"

namespace vermins {

using ordered_json = nlohmann::ordered_json;

Network::Network(std::vector<NodeRecord> nodes, std::vector<std::pair<int, int>> edges,
                 bool directed, int source, int sink)
    : nodes_(std::move(nodes)), edges_(std::move(edges)),
      directed_(directed), source_(source), sink_(sink) {
    const int n = node_count();
    if (n < 2)
        throw ValidationError("network needs at least 2 nodes");

    std::sort(nodes_.begin(), nodes_.end(),
              [](const NodeRecord& a, const NodeRecord& b) { return a.id < b.id; });
    for (int i = 0; i < n; ++i) {
        if (nodes_[i].id != i) {
            if (i > 0 && nodes_[i].id == nodes_[i - 1].id)
                throw ValidationError("duplicate node id " + std::to_string(nodes_[i].id));
            throw IndexOutOfRangeError("node ids must be dense 0.." + std::to_string(n - 1) +
                                       "; got id " + std::to_string(nodes_[i].id));
        }
    }

    if (source_ < 0 || source_ >= n)
        throw IndexOutOfRangeError("source index " + std::to_string(source_) + " out of range");
    if (sink_ < 0 || sink_ >= n)
        throw IndexOutOfRangeError("sink index " + std::to_string(sink_) + " out of range");
    if (source_ == sink_)
        throw SourceEqualsSinkError("source and sink must differ");

    // Weight provenance must be uniform across the whole network.
    const bool has_coords = nodes_[0].point.has_value();
    for (const auto& rec : nodes_) {
        if (rec.point.has_value() != has_coords ||
            rec.explicit_weight.has_value() == has_coords)
            throw MixedProvenanceError(
                "node " + std::to_string(rec.id) +
                " mixes weight provenance (all nodes need coords, or all explicit weights)");
    }
    mode_ = has_coords ? WeightMode::coordinates : WeightMode::explicit_weights;

    if (mode_ == WeightMode::coordinates) {
        const int dim = nodes_[0].point->dim();
        for (const auto& rec : nodes_) {
            validate_point(*rec.point);
            if (rec.point->dim() != dim)
                throw DimensionMismatchError("node " + std::to_string(rec.id) +
                                             " has dimension " + std::to_string(rec.point->dim()) +
                                             ", expected " + std::to_string(dim));
        }
        if (point(source_) == point(sink_))
            throw DegenerateGeometryError("source and sink points coincide");
    } else {
        for (const auto& rec : nodes_) {
            const double w = *rec.explicit_weight;
            if (!std::isfinite(w) || w < 0.0)
                throw ValidationError("node " + std::to_string(rec.id) +
                                      " has invalid explicit weight");
        }
    }

    std::set<std::pair<int, int>> seen;
    for (auto& e : edges_) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
            throw IndexOutOfRangeError("edge (" + std::to_string(e.first) + "," +
                                       std::to_string(e.second) + ") out of range");
        if (e.first == e.second)
            throw ValidationError("self-loop edge at node " + std::to_string(e.first));
        if (!directed_ && e.first > e.second)
            std::swap(e.first, e.second);
        if (!seen.insert(e).second)
            throw ValidationError("duplicate edge (" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ")");
    }
    std::sort(edges_.begin(), edges_.end());

    out_.assign(n, {});
    in_.assign(n, {});
    for (const auto& [a, b] : edges_) {
        out_[a].push_back(b);
        in_[b].push_back(a);
        if (!directed_) {
            out_[b].push_back(a);
            in_[a].push_back(b);
        }
    }
    for (auto& v : out_) std::sort(v.begin(), v.end());
    for (auto& v : in_) std::sort(v.begin(), v.end());
}

bool Network::has_edge(int from, int to) const {
    const auto& nb = out_[from];
    return std::binary_search(nb.begin(), nb.end(), to);
}

Network build_network(std::vector<NodeRecord> nodes, std::vector<std::pair<int, int>> edges,
                      bool directed, int source, int sink) {
    return Network(std::move(nodes), std::move(edges), directed, source, sink);
}

ConnectivityMatrix connectivity_matrix(const Network& net) {
    const int n = net.node_count();
    ConnectivityMatrix m;
    m.n = n;
    m.entries.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        m.entries[static_cast<std::size_t>(i) * n + i] = 1; // self-connectivity
        for (int j : net.out_neighbors(i))
            m.entries[static_cast<std::size_t>(i) * n + j] = 1;
    }
    return m;
}

ConnectivityMatrix symmetrized(const ConnectivityMatrix& m) {
    ConnectivityMatrix s = m;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.at(i, j))
                s.entries[static_cast<std::size_t>(j) * m.n + i] = 1;
    return s;
}

std::string ConnectivityMatrix::to_text() const {
    std::string out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j) out += ' ';
            out += at(i, j) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

namespace {

void require_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                  const char* what) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ParseError(std::string("unknown key \"") + it.key() + "\" in " + what);
}

const ordered_json& require_field(const ordered_json& obj, const char* key, const char* what) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(std::string("missing key \"") + key + "\" in " + what);
    return *it;
}

} // namespace

Network parse_network(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid network file: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("network file must be an object");
    require_keys(j, {"directed", "source", "sink", "nodes", "edges"}, "network");

    const auto& jdir = require_field(j, "directed", "network");
    const auto& jsrc = require_field(j, "source", "network");
    const auto& jsnk = require_field(j, "sink", "network");
    const auto& jnodes = require_field(j, "nodes", "network");
    const auto& jedges = require_field(j, "edges", "network");
    if (!jdir.is_boolean() || !jsrc.is_number_integer() || !jsnk.is_number_integer() ||
        !jnodes.is_array() || !jedges.is_array())
        throw ParseError("network fields have wrong types");

    std::vector<NodeRecord> nodes;
    std::set<int> ids;
    for (const auto& jn : jnodes) {
        if (!jn.is_object())
            throw ParseError("node entries must be objects");
        require_keys(jn, {"id", "coords", "weight"}, "node");
        NodeRecord rec;
        const auto& jid = require_field(jn, "id", "node");
        if (!jid.is_number_integer())
            throw ParseError("node id must be an integer");
        rec.id = jid.get<int>();
        if (!ids.insert(rec.id).second)
            throw ParseError("duplicate node id " + std::to_string(rec.id));
        const bool has_coords = jn.contains("coords");
        const bool has_weight = jn.contains("weight");
        if (has_coords == has_weight)
            throw ParseError("node " + std::to_string(rec.id) +
                             " must have exactly one of coords/weight");
        if (has_coords) {
            const auto& jc = jn["coords"];
            if (!jc.is_array() || jc.empty())
                throw ParseError("coords must be a non-empty array of numbers");
            Point p;
            for (const auto& c : jc) {
                if (!c.is_number())
                    throw ParseError("coords must be numbers");
                p.coords.push_back(c.get<double>());
            }
            rec.point = std::move(p);
        } else {
            if (!jn["weight"].is_number())
                throw ParseError("weight must be a number");
            rec.explicit_weight = jn["weight"].get<double>();
        }
        nodes.push_back(std::move(rec));
    }

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    const bool directed = jdir.get<bool>();
    for (const auto& je : jedges) {
        if (!je.is_array() || je.size() != 2 ||
            !je[0].is_number_integer() || !je[1].is_number_integer())
            throw ParseError("edges must be [int,int] pairs");
        std::pair<int, int> e{je[0].get<int>(), je[1].get<int>()};
        auto canon = e;
        if (!directed && canon.first > canon.second)
            std::swap(canon.first, canon.second);
        if (!seen.insert(canon).second)
            throw ParseError("duplicate edge (" + std::to_string(e.first) + "," +
                             std::to_string(e.second) + ")");
        edges.push_back(e);
    }

    return build_network(std::move(nodes), std::move(edges), directed,
                         jsrc.get<int>(), jsnk.get<int>());
}

std::string serialize_network(const Network& net) {
    ordered_json j;
    j["directed"] = net.directed();
    j["source"] = net.source();
    j["sink"] = net.sink();
    j["nodes"] = ordered_json::array();
    for (const auto& rec : net.nodes()) {
        ordered_json jn;
        jn["id"] = rec.id;
        if (rec.point)
            jn["coords"] = rec.point->coords;
        else
            jn["weight"] = *rec.explicit_weight;
        j["nodes"].push_back(std::move(jn));
    }
    j["edges"] = ordered_json::array();
    for (const auto& [a, b] : net.edges())
        j["edges"].push_back(ordered_json::array({a, b}));
    return j.dump(2) + "\n";
}

std::string network_digest(const Network& net) {
    const std::string bytes = serialize_network(net);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void validate_route(const Route& route, const Network& net) {
    if (route.path.size() < 2)
        throw ValidationError("route needs at least two nodes");
    if (route.path.front() != net.source())
        throw ValidationError("route does not start at the source");
    if (route.path.back() != net.sink())
        throw ValidationError("route does not end at the sink");
    std::set<int> seen;
    for (int v : route.path) {
        if (v < 0 || v >= net.node_count())
            throw IndexOutOfRangeError("route node " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second)
            throw ValidationError("route repeats node " + std::to_string(v));
    }
    for (std::size_t i = 0; i + 1 < route.path.size(); ++i)
        if (!net.has_edge(route.path[i], route.path[i + 1]))
            throw ValidationError("route uses missing edge (" + std::to_string(route.path[i]) +
                                  "," + std::to_string(route.path[i + 1]) + ")");
}

} // namespace vermins
