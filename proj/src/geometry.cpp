#include "vermins/geometry.hpp"

#include <cmath>
#include <string>

#include "vermins/errors.hpp"

namespace vermins {

void validate_point(const Point& p) {
    if (p.coords.empty())
        throw ValidationError("point must have dimension >= 1");
    for (double c : p.coords)
        if (!std::isfinite(c))
            throw ValidationError("point coordinate is not finite");
}

static void require_same_dim(const Point& a, const Point& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError("dimension mismatch: " + std::to_string(a.dim()) +
                                     " vs " + std::to_string(b.dim()));
}

double euclidean_distance(const Point& a, const Point& b) {
    require_same_dim(a, b);
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i) {
        const double d = a.coords[i] - b.coords[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double perpendicular_distance(const Point& p, const Point& source, const Point& sink) {
    require_same_dim(p, source);
    require_same_dim(source, sink);

    const double axis_len = euclidean_distance(source, sink);
    if (axis_len == 0.0)
        throw DegenerateGeometryError("source and sink coincide; ideal route is undefined");

    // v = p - source, projected onto the unit source->sink axis.
    double proj = 0.0;
    for (int i = 0; i < p.dim(); ++i)
        proj += (p.coords[i] - source.coords[i]) * (sink.coords[i] - source.coords[i]);
    proj /= axis_len;

    double rej2 = 0.0;
    for (int i = 0; i < p.dim(); ++i) {
        const double u = (sink.coords[i] - source.coords[i]) / axis_len;
        const double r = (p.coords[i] - source.coords[i]) - proj * u;
        rej2 += r * r;
    }
    return std::sqrt(rej2);
}

} // namespace vermins
