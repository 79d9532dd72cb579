#pragma once

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vermins/geometry.hpp"
#include "vermins/network.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline vermins::Network load_fixture(const std::string& name) {
    return vermins::parse_network(read_file(fixture_path(name)));
}

// Distance from p to the parametric line source + t*(sink-source), minimized
// by dense golden-section search. Independent of the projection formula.
inline double line_distance_by_search(const vermins::Point& p, const vermins::Point& source,
                                      const vermins::Point& sink) {
    auto at = [&](double t) {
        vermins::Point q;
        q.coords.resize(source.coords.size());
        for (std::size_t i = 0; i < q.coords.size(); ++i)
            q.coords[i] = source.coords[i] + t * (sink.coords[i] - source.coords[i]);
        return euclidean_distance(p, q);
    };
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = -1e3, hi = 1e3;
    double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
    double fa = at(a), fb = at(b);
    for (int it = 0; it < 300; ++it) {
        if (fa < fb) {
            hi = b; b = a; fb = fa;
            a = hi - phi * (hi - lo); fa = at(a);
        } else {
            lo = a; a = b; fa = fb;
            b = lo + phi * (hi - lo); fb = at(b);
        }
    }
    return std::min(fa, fb);
}

inline vermins::Point random_point(std::mt19937_64& rng, int dim, double lo = -1.0,
                                   double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    vermins::Point p;
    p.coords.resize(dim);
    for (double& c : p.coords)
        c = u(rng);
    return p;
}

// Random orthogonal matrix via Gram-Schmidt on a Gaussian matrix.
inline std::vector<std::vector<double>> random_rotation(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<std::vector<double>> q(dim, std::vector<double>(dim));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j)
            q[i][j] = g(rng);
        for (int k = 0; k < i; ++k) {
            double dot = 0.0;
            for (int j = 0; j < dim; ++j)
                dot += q[i][j] * q[k][j];
            for (int j = 0; j < dim; ++j)
                q[i][j] -= dot * q[k][j];
        }
        double norm = 0.0;
        for (int j = 0; j < dim; ++j)
            norm += q[i][j] * q[i][j];
        norm = std::sqrt(norm);
        for (int j = 0; j < dim; ++j)
            q[i][j] /= norm;
    }
    return q;
}

inline vermins::Point transform(const vermins::Point& p,
                                const std::vector<std::vector<double>>& rot,
                                const vermins::Point& shift) {
    vermins::Point out;
    const int dim = p.dim();
    out.coords.assign(dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j)
            out.coords[i] += rot[i][j] * p.coords[j];
        out.coords[i] += shift.coords[i];
    }
    return out;
}

} // namespace testutil
