#pragma once

#include <vector>

namespace vermins {

/// A d-dimensional Euclidean coordinate vector.
struct Point {
    std::vector<double> coords;

    int dim() const { return static_cast<int>(coords.size()); }
    bool operator==(const Point&) const = default;
};

// Throws unless dim >= 1 and every coordinate is finite.
void validate_point(const Point& p);

double euclidean_distance(const Point& a, const Point& b);

/// Orthogonal distance from p to the infinite line through source and sink.
/// Throws DegenerateGeometryError when source == sink.
double perpendicular_distance(const Point& p, const Point& source, const Point& sink);

} // namespace vermins
