#ifndef FERRERS3D_ENUMERATE_HPP
#define FERRERS3D_ENUMERATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ferrers3d/diagram.hpp"

namespace ferrers3d {

// Deterministic random stream.  Draws go through explicit rejection sampling
// on the raw 64-bit engine output, so the values are identical on every
// platform for a given seed.
class RandomSource {
    std::mt19937_64 eng_;

  public:
    explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    int below(int n); // uniform over 0..n-1, n >= 1
};

// Every nonempty downward closed diagram inside the box, built layer by
// layer from weakly decreasing column-height profiles.
std::vector<Diagram> all_ferrers_in_box(int a, int b, int c);

// Random nonempty downward closed diagram inside the box.
Diagram random_ferrers(int a, int b, int c, RandomSource& rng);

// Random diagram with the projection property: a random downward closed
// diagram replaced by its projection closure, which never leaves the box.
// With a positive max_points the draw is repeated while the closure is
// larger, keeping downstream basis computations bounded.
Diagram random_projection_diagram(int a, int b, int c, RandomSource& rng,
                                  std::size_t max_points = 0);

} // namespace ferrers3d

#endif
