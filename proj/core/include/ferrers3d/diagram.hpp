#ifndef FERRERS3D_DIAGRAM_HPP
#define FERRERS3D_DIAGRAM_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ferrers3d/point.hpp"

namespace ferrers3d {

// Finite set of lattice points with coordinates >= 1, kept sorted
// lexicographically without duplicates.  Diagrams are never empty; operations
// whose result would be empty raise an error instead.
class Diagram {
    std::vector<Point> pts_;

  public:
    explicit Diagram(std::vector<Point> pts);

    const std::vector<Point>& points() const noexcept { return pts_; }
    std::size_t size() const noexcept { return pts_.size(); }
    bool contains(const Point& p) const;

    // Points on the x = 1 layer, and everything above it.
    std::vector<Point> layer_one() const;
    std::vector<Point> upper_layers() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;
};

// Essential lengths: the number of distinct values taken by each coordinate.
struct Extents {
    int a = 0;
    int b = 0;
    int c = 0;

    friend bool operator==(const Extents&, const Extents&) = default;
};

// Maximal extent of the diagram along each axis-parallel ray through a point.
struct RayExtents {
    int a = 0; // max i with (i, u.j, u.k) present
    int b = 0; // max j with (u.i, j, u.k) present
    int c = 0; // max k with (u.i, u.j, k) present

    friend bool operator==(const RayExtents&, const RayExtents&) = default;
};

// Decomposition of a diagram relative to a point u on the x = 1 layer.  With
// beta = b(u) and gamma = c(u) the zones are, in order,
//   1: j <= u.j,          k > gamma
//   2: j <= u.j,          u.k < k <= gamma
//   3: j <= u.j,          k <= u.k
//   4: u.j < j <= beta,   u.k < k <= gamma
//   5: u.j < j <= beta,   k <= u.k
//   6: j > beta,          k < u.k
// For downward closed diagrams these six sets partition the diagram.  Zones
// may be empty, so they are stored as plain point lists rather than Diagrams.
struct ZonePartition {
    std::array<std::vector<Point>, 6> zone;
};

// Two-stage traversal of the x = 1 layer.  When the diagram has essential
// length a < 2 the order degenerates to the lexicographic one and the flag is
// set; callers that need the genuine two-stage order must check it.
struct InductionOrder {
    std::vector<Point> points;
    bool degenerate = false;
};

enum class OrderKind { lexicographic, induction };

// Split of the x = 1 layer into normal and phantom points with respect to a
// traversal order.  A point u is normal when some coordinate switch pairs it
// with a later point such that both partner points survive as well; phantom
// otherwise.
struct PointClassification {
    std::vector<Point> order;
    std::vector<Point> normal;
    std::vector<Point> phantom;
};

Diagram from_generators(const std::vector<Point>& gens);

bool is_ferrers(const Diagram& d);

// Whether for every slice i >= 2 the point (i-1, b_i, c_i) is present, where
// b_i and c_i are the maximal j and k reachable on the slice's bottom edges.
// Requires a downward closed diagram.
bool has_projection_property(const Diagram& d);

// Smallest downward closed superset of d satisfying has_projection_property.
Diagram projection_closure(const Diagram& d);

Extents extents(const Diagram& d);
RayExtents ray_extents(const Diagram& d, const Point& u);

// Removes the layer axis = value, keeping the coordinates of the surviving
// points unchanged.
Diagram truncate(const Diagram& d, Axis axis, int value);

// Removes all points lexicographically preceding u (u must be present).
Diagram tail(const Diagram& d, const Point& u);

// Swaps the j and k coordinates of every point.
Diagram flip(const Diagram& d);

// Renames coordinate values to consecutive ranks 1, 2, ... along each axis.
// Truncations of downward closed diagrams become downward closed again after
// compression.
Diagram compress(const Diagram& d);

ZonePartition zones(const Diagram& d, const Point& u);

InductionOrder induction_order(const Diagram& d);

PointClassification classify_points(const Diagram& d, OrderKind kind);

std::string to_string(const Diagram& d);

} // namespace ferrers3d

#endif
