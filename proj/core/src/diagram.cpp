#include "ferrers3d/diagram.hpp"

#include <algorithm>
#include <set>

#include "ferrers3d/error.hpp"

namespace ferrers3d {

Diagram::Diagram(std::vector<Point> pts) : pts_(std::move(pts)) {
    if (pts_.empty())
        fail(errc::invalid_input, "diagram must contain at least one point");
    for (const Point& p : pts_)
        if (p.i < 1 || p.j < 1 || p.k < 1)
            fail(errc::invalid_input, "coordinates must be >= 1, got " + to_string(p));
    std::sort(pts_.begin(), pts_.end());
    if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
        fail(errc::invalid_input, "duplicate point in diagram");
}

bool Diagram::contains(const Point& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

std::vector<Point> Diagram::layer_one() const {
    std::vector<Point> out;
    for (const Point& p : pts_)
        if (p.i == 1)
            out.push_back(p);
    return out;
}

std::vector<Point> Diagram::upper_layers() const {
    std::vector<Point> out;
    for (const Point& p : pts_)
        if (p.i >= 2)
            out.push_back(p);
    return out;
}

Diagram from_generators(const std::vector<Point>& gens) {
    if (gens.empty())
        fail(errc::invalid_input, "generator list must not be empty");
    std::set<Point> closed;
    for (const Point& g : gens) {
        if (g.i < 1 || g.j < 1 || g.k < 1)
            fail(errc::invalid_input, "coordinates must be >= 1, got " + to_string(g));
        for (int i = 1; i <= g.i; ++i)
            for (int j = 1; j <= g.j; ++j)
                for (int k = 1; k <= g.k; ++k)
                    closed.insert(Point{i, j, k});
    }
    return Diagram(std::vector<Point>(closed.begin(), closed.end()));
}

bool is_ferrers(const Diagram& d) {
    // Checking the three immediate predecessors of every point suffices.
    for (const Point& p : d.points()) {
        if (p.i > 1 && !d.contains(Point{p.i - 1, p.j, p.k}))
            return false;
        if (p.j > 1 && !d.contains(Point{p.i, p.j - 1, p.k}))
            return false;
        if (p.k > 1 && !d.contains(Point{p.i, p.j, p.k - 1}))
            return false;
    }
    return true;
}

namespace {

int max_i(const Diagram& d) {
    int m = 0;
    for (const Point& p : d.points())
        m = std::max(m, p.i);
    return m;
}

// b_i and c_i: the essential lengths of slice i measured along its bottom
// edges (j, 1) and (1, k).  Only meaningful for downward closed diagrams.
int slice_b(const Diagram& d, int i) {
    int m = 0;
    for (const Point& p : d.points())
        if (p.i == i && p.k == 1)
            m = std::max(m, p.j);
    return m;
}

int slice_c(const Diagram& d, int i) {
    int m = 0;
    for (const Point& p : d.points())
        if (p.i == i && p.j == 1)
            m = std::max(m, p.k);
    return m;
}

} // namespace

bool has_projection_property(const Diagram& d) {
    if (!is_ferrers(d))
        fail(errc::precondition, "projection property is only defined for downward closed diagrams");
    int a = max_i(d);
    for (int i = 2; i <= a; ++i)
        if (!d.contains(Point{i - 1, slice_b(d, i), slice_c(d, i)}))
            return false;
    return true;
}

Diagram projection_closure(const Diagram& d) {
    std::set<Point> cur;
    for (const Point& g : d.points())
        for (int i = 1; i <= g.i; ++i)
            for (int j = 1; j <= g.j; ++j)
                for (int k = 1; k <= g.k; ++k)
                    cur.insert(Point{i, j, k});
    for (;;) {
        Diagram snap{std::vector<Point>(cur.begin(), cur.end())};
        if (has_projection_property(snap))
            return snap;
        int a = max_i(snap);
        for (int i = 2; i <= a; ++i) {
            Point need{i - 1, slice_b(snap, i), slice_c(snap, i)};
            if (!snap.contains(need))
                for (int ii = 1; ii <= need.i; ++ii)
                    for (int jj = 1; jj <= need.j; ++jj)
                        for (int kk = 1; kk <= need.k; ++kk)
                            cur.insert(Point{ii, jj, kk});
        }
    }
}

Extents extents(const Diagram& d) {
    std::set<int> is, js, ks;
    for (const Point& p : d.points()) {
        is.insert(p.i);
        js.insert(p.j);
        ks.insert(p.k);
    }
    return Extents{static_cast<int>(is.size()), static_cast<int>(js.size()),
                   static_cast<int>(ks.size())};
}

RayExtents ray_extents(const Diagram& d, const Point& u) {
    if (!d.contains(u))
        fail(errc::precondition, "ray extents require a point of the diagram, got " + to_string(u));
    RayExtents r;
    for (const Point& p : d.points()) {
        if (p.j == u.j && p.k == u.k)
            r.a = std::max(r.a, p.i);
        if (p.i == u.i && p.k == u.k)
            r.b = std::max(r.b, p.j);
        if (p.i == u.i && p.j == u.j)
            r.c = std::max(r.c, p.k);
    }
    return r;
}

Diagram truncate(const Diagram& d, Axis axis, int value) {
    std::vector<Point> kept;
    for (const Point& p : d.points())
        if (coord(p, axis) != value)
            kept.push_back(p);
    if (kept.empty())
        fail(errc::invalid_input,
             "truncating " + to_string(axis) + " = " + std::to_string(value) + " empties the diagram");
    return Diagram(std::move(kept));
}

Diagram tail(const Diagram& d, const Point& u) {
    if (!d.contains(u))
        fail(errc::precondition, "tail requires a point of the diagram, got " + to_string(u));
    std::vector<Point> kept;
    for (const Point& p : d.points())
        if (!(p < u))
            kept.push_back(p);
    return Diagram(std::move(kept));
}

Diagram flip(const Diagram& d) {
    std::vector<Point> out;
    out.reserve(d.size());
    for (const Point& p : d.points())
        out.push_back(Point{p.i, p.k, p.j});
    return Diagram(std::move(out));
}

Diagram compress(const Diagram& d) {
    std::set<int> is, js, ks;
    for (const Point& p : d.points()) {
        is.insert(p.i);
        js.insert(p.j);
        ks.insert(p.k);
    }
    auto rank = [](const std::set<int>& vals) {
        std::vector<std::pair<int, int>> r;
        int n = 0;
        for (int v : vals)
            r.emplace_back(v, ++n);
        return r;
    };
    auto ri = rank(is), rj = rank(js), rk = rank(ks);
    auto lookup = [](const std::vector<std::pair<int, int>>& r, int v) {
        for (const auto& [old_v, new_v] : r)
            if (old_v == v)
                return new_v;
        return 0;
    };
    std::vector<Point> out;
    out.reserve(d.size());
    for (const Point& p : d.points())
        out.push_back(Point{lookup(ri, p.i), lookup(rj, p.j), lookup(rk, p.k)});
    return Diagram(std::move(out));
}

ZonePartition zones(const Diagram& d, const Point& u) {
    if (!d.contains(u) || u.i != 1)
        fail(errc::precondition, "zones require a point on the x = 1 layer, got " + to_string(u));
    RayExtents r = ray_extents(d, u);
    const int beta = r.b, gamma = r.c;
    ZonePartition zp;
    for (const Point& p : d.points()) {
        if (p.j <= u.j && p.k > gamma)
            zp.zone[0].push_back(p);
        else if (p.j <= u.j && p.k > u.k)
            zp.zone[1].push_back(p);
        else if (p.j <= u.j)
            zp.zone[2].push_back(p);
        else if (p.j <= beta && p.k > u.k && p.k <= gamma)
            zp.zone[3].push_back(p);
        else if (p.j <= beta && p.k <= u.k)
            zp.zone[4].push_back(p);
        else if (p.j > beta && p.k < u.k)
            zp.zone[5].push_back(p);
        else
            fail(errc::precondition,
                 "zones cover downward closed diagrams only; " + to_string(p) + " is uncovered");
    }
    return zp;
}

InductionOrder induction_order(const Diagram& d) {
    std::vector<Point> d1 = d.layer_one();
    if (extents(d).a < 2) {
        std::sort(d1.begin(), d1.end());
        return InductionOrder{std::move(d1), true};
    }
    // Essential length along z of the part above the first layer; the first
    // stage walks the points with k below it lexicographically, the second
    // stage walks the rest in lexicographic order of the flipped coordinates.
    int c2 = 0;
    for (const Point& p : d.upper_layers())
        c2 = std::max(c2, p.k);
    std::vector<Point> stage1, stage2;
    for (const Point& p : d1)
        (p.k <= c2 ? stage1 : stage2).push_back(p);
    std::sort(stage1.begin(), stage1.end());
    std::sort(stage2.begin(), stage2.end(), [](const Point& l, const Point& r) {
        return std::pair(l.k, l.j) < std::pair(r.k, r.j);
    });
    stage1.insert(stage1.end(), stage2.begin(), stage2.end());
    return InductionOrder{std::move(stage1), false};
}

namespace {

// Partner points of the coordinate switch between u and v along an axis.
std::pair<Point, Point> switch_partners(const Point& u, const Point& v, Axis axis) {
    switch (axis) {
    case Axis::x: return {Point{v.i, u.j, u.k}, Point{u.i, v.j, v.k}};
    case Axis::y: return {Point{u.i, v.j, u.k}, Point{v.i, u.j, v.k}};
    default: return {Point{u.i, u.j, v.k}, Point{v.i, v.j, u.k}};
    }
}

} // namespace

PointClassification classify_points(const Diagram& d, OrderKind kind) {
    if (!is_ferrers(d))
        fail(errc::precondition, "point classification requires a downward closed diagram");
    std::vector<Point> ord;
    if (kind == OrderKind::induction) {
        ord = induction_order(d).points;
    } else {
        ord = d.layer_one();
        std::sort(ord.begin(), ord.end());
    }

    PointClassification out;
    out.order = ord;
    // A_u: the diagram with the traversal predecessors of u removed.  u is
    // normal when a switch with a later point keeps all four corners in A_u.
    std::set<Point> removed;
    for (const Point& u : ord) {
        auto in_tail = [&](const Point& p) { return d.contains(p) && !removed.count(p); };
        bool normal = false;
        for (const Point& v : d.points()) {
            if (v == u || !in_tail(v))
                continue;
            for (Axis axis : {Axis::x, Axis::y, Axis::z}) {
                auto [p, q] = switch_partners(u, v, axis);
                if (p == u || p == v) // switch along a shared coordinate is trivial
                    continue;
                if (in_tail(p) && in_tail(q)) {
                    normal = true;
                    break;
                }
            }
            if (normal)
                break;
        }
        (normal ? out.normal : out.phantom).push_back(u);
        removed.insert(u);
    }
    return out;
}

std::string to_string(const Diagram& d) {
    std::string s = "{";
    for (std::size_t n = 0; n < d.size(); ++n) {
        if (n)
            s += ", ";
        s += to_string(d.points()[n]);
    }
    return s + "}";
}

} // namespace ferrers3d
