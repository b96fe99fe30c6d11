#include "ferrers3d/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "ferrers3d/error.hpp"

namespace ferrers3d {

int RandomSource::below(int n) {
    if (n < 1)
        fail(errc::invalid_input, "below() needs a positive range");
    std::uint64_t span = static_cast<std::uint64_t>(n);
    std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do
        r = eng_();
    while (r >= limit);
    return static_cast<int>(r % span);
}

namespace {

// A layer is a weakly decreasing column-height profile h over 1..b with
// 0 <= h_j <= c; the layer's points are (j, k) with k <= h_j.
using Layer = std::vector<int>;

std::vector<Layer> all_layers(int b, int c) {
    std::vector<Layer> out;
    Layer h(static_cast<std::size_t>(b), 0);
    std::function<void(int, int)> rec = [&](int col, int cap) {
        if (col == b) {
            out.push_back(h);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            h[static_cast<std::size_t>(col)] = v;
            rec(col + 1, v);
        }
    };
    rec(0, c);
    return out;
}

bool layer_below(const Layer& lo, const Layer& hi) {
    for (std::size_t n = 0; n < lo.size(); ++n)
        if (lo[n] > hi[n])
            return false;
    return true;
}

void append_layer_points(std::vector<Point>& pts, int i, const Layer& h) {
    for (std::size_t j = 0; j < h.size(); ++j)
        for (int k = 1; k <= h[j]; ++k)
            pts.push_back(Point{i, static_cast<int>(j) + 1, k});
}

} // namespace

std::vector<Diagram> all_ferrers_in_box(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1)
        fail(errc::invalid_input, "box extents must be positive");
    std::vector<Layer> layers = all_layers(b, c);

    std::vector<Diagram> out;
    std::vector<const Layer*> chain;
    std::function<void(const Layer&)> rec = [&](const Layer& above) {
        if (!chain.empty()) {
            std::vector<Point> pts;
            for (std::size_t i = 0; i < chain.size(); ++i)
                append_layer_points(pts, static_cast<int>(i) + 1, *chain[i]);
            out.push_back(Diagram(std::move(pts)));
        }
        if (static_cast<int>(chain.size()) == a)
            return;
        for (const Layer& next : layers) {
            if (next[0] == 0 || !layer_below(next, above))
                continue;
            chain.push_back(&next);
            rec(next);
            chain.pop_back();
        }
    };
    Layer full(static_cast<std::size_t>(b), c);
    rec(full);
    return out;
}

Diagram random_ferrers(int a, int b, int c, RandomSource& rng) {
    if (a < 1 || b < 1 || c < 1)
        fail(errc::invalid_input, "box extents must be positive");
    std::vector<Point> pts;
    Layer above(static_cast<std::size_t>(b), c);
    int depth = 1 + rng.below(a);
    for (int i = 1; i <= depth; ++i) {
        Layer h(static_cast<std::size_t>(b), 0);
        int cap = above[0];
        if (i == 1)
            h[0] = 1 + rng.below(cap); // keep the diagram nonempty
        else
            h[0] = rng.below(cap + 1);
        if (h[0] == 0)
            break;
        for (std::size_t j = 1; j < h.size(); ++j) {
            cap = std::min(above[j], h[j - 1]);
            h[j] = rng.below(cap + 1);
        }
        append_layer_points(pts, i, h);
        above = h;
    }
    return Diagram(std::move(pts));
}

Diagram random_projection_diagram(int a, int b, int c, RandomSource& rng,
                                  std::size_t max_points) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Diagram d = projection_closure(random_ferrers(a, b, c, rng));
        if (max_points == 0 || d.size() <= max_points)
            return d;
    }
    fail(errc::resource_limit, "no projection-property sample within the point bound");
}

} // namespace ferrers3d
