#ifndef FERRERS3D_POINT_HPP
#define FERRERS3D_POINT_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace ferrers3d {

// Lattice point with 1-based coordinates.  The derived ordering is the
// lexicographic one on (i, j, k), which is also the order used to index the
// T variables: the lexicographically first point owns the largest variable.
struct Point {
    int i = 1;
    int j = 1;
    int k = 1;

    friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Axis { x, y, z };

inline int coord(const Point& p, Axis a) {
    switch (a) {
    case Axis::x: return p.i;
    case Axis::y: return p.j;
    default: return p.k;
    }
}

inline std::string to_string(const Point& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + "," + std::to_string(p.k) + ")";
}

inline std::string to_string(Axis a) {
    switch (a) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    default: return "z";
    }
}

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (int c : {p.i, p.j, p.k}) {
            h ^= static_cast<std::uint64_t>(c);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace ferrers3d

#endif
