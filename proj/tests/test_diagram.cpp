#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <bit>
#include <cstdint>
#include <set>

#include "ferrers3d/diagram.hpp"
#include "ferrers3d/enumerate.hpp"
#include "ferrers3d/error.hpp"
#include "ferrers3d/runner.hpp"
#include "helpers.hpp"

using namespace ferrers3d;
using namespace ferrers3d::tests;

namespace {

template <typename F> errc code_of(F&& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    throw std::runtime_error("expected an error");
}

Diagram cube(int a, int b, int c) {
    return from_generators({Point{a, b, c}});
}

// Independent enumeration of the downward closed subsets of the 3x3x3 box.
// Subsets are 27-bit masks; downward closure is checked bit by bit against
// precomputed predecessor masks and the projection property is evaluated
// straight on the mask, without any library call.
int bit_of(int i, int j, int k) { return (i - 1) * 9 + (j - 1) * 3 + (k - 1); }

struct BoxCounts {
    long closed = 0;
    long projection = 0;
};

BoxCounts enumerate_box3_by_masks() {
    std::array<std::uint32_t, 27> req{};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                std::uint32_t m = 0;
                if (i > 1)
                    m |= 1u << bit_of(i - 1, j, k);
                if (j > 1)
                    m |= 1u << bit_of(i, j - 1, k);
                if (k > 1)
                    m |= 1u << bit_of(i, j, k - 1);
                req[static_cast<std::size_t>(bit_of(i, j, k))] = m;
            }
    BoxCounts counts;
    for (std::uint32_t mask = 1; mask < (1u << 27); ++mask) {
        bool ok = true;
        for (std::uint32_t rest = mask; rest;) {
            int b = std::countr_zero(rest);
            if ((mask & req[static_cast<std::size_t>(b)]) != req[static_cast<std::size_t>(b)]) {
                ok = false;
                break;
            }
            rest &= rest - 1;
        }
        if (!ok)
            continue;
        ++counts.closed;
        bool proj = true;
        for (int i = 2; i <= 3 && proj; ++i) {
            if (!(mask >> bit_of(i, 1, 1) & 1))
                continue;
            int bi = 1, ci = 1;
            for (int j = 2; j <= 3; ++j)
                if (mask >> bit_of(i, j, 1) & 1)
                    bi = j;
            for (int k = 2; k <= 3; ++k)
                if (mask >> bit_of(i, 1, k) & 1)
                    ci = k;
            if (!(mask >> bit_of(i - 1, bi, ci) & 1))
                proj = false;
        }
        if (proj)
            ++counts.projection;
    }
    return counts;
}

} // namespace

TEST_CASE("from_generators closes downward") {
    Diagram minexam = example_diagram("minexam");
    CHECK(minexam.size() == 16);
    CHECK(from_generators({pt(1, 2, 3), pt(1, 3, 2), pt(2, 1, 3), pt(2, 3, 1), pt(3, 1, 2),
                           pt(3, 2, 1)}) == minexam);
    CHECK(from_generators({pt(1, 1, 1)}) == diag({pt(1, 1, 1)}));
    CHECK(from_generators({pt(2, 2, 1)}) ==
          diag({pt(1, 1, 1), pt(1, 2, 1), pt(2, 1, 1), pt(2, 2, 1)}));
    CHECK(code_of([] { from_generators({}); }) == errc::invalid_input);
    CHECK(code_of([] { from_generators({pt(0, 1, 1)}); }) == errc::invalid_input);
}

TEST_CASE("diagram construction validates the point set") {
    CHECK(code_of([] { Diagram d({}); }) == errc::invalid_input);
    CHECK(code_of([] { Diagram d({pt(1, 1, 1), pt(1, 1, 1)}); }) == errc::invalid_input);
    CHECK(code_of([] { Diagram d({pt(1, -1, 1)}); }) == errc::invalid_input);
    Diagram d({pt(2, 1, 1), pt(1, 1, 1)});
    CHECK(d.points().front() == pt(1, 1, 1)); // sorted on construction
    CHECK(d.contains(pt(2, 1, 1)));
    CHECK(!d.contains(pt(1, 2, 1)));
}

TEST_CASE("is_ferrers recognizes downward closed sets") {
    CHECK(is_ferrers(example_diagram("minexam")));
    CHECK(is_ferrers(cube(2, 2, 2)));
    CHECK(!is_ferrers(diag({pt(1, 1, 1), pt(2, 2, 2)})));
}

TEST_CASE("projection property") {
    CHECK(!has_projection_property(example_diagram("minexam")));
    CHECK(has_projection_property(example_diagram("closure")));
    CHECK(has_projection_property(cube(3, 3, 3)));
    CHECK(has_projection_property(cube(1, 3, 2))); // single slice is automatic
    CHECK(has_projection_property(cube(2, 2, 1)));
    CHECK(!has_projection_property(example_diagram("five-gen")));
    CHECK(code_of([] { has_projection_property(diag({pt(1, 1, 1), pt(2, 2, 2)})); }) ==
          errc::precondition);
}

TEST_CASE("projection_closure attaches exactly the forced points") {
    Diagram minexam = example_diagram("minexam");
    Diagram closure = projection_closure(minexam);
    CHECK(closure.size() == 18);
    CHECK(closure == example_diagram("closure"));
    std::vector<Point> expected = minexam.points();
    expected.push_back(pt(2, 2, 2));
    expected.push_back(pt(1, 3, 3));
    CHECK(closure == diag(expected));
    CHECK(projection_closure(closure) == closure);
    CHECK(projection_closure(cube(3, 2, 2)) == cube(3, 2, 2));
    CHECK(projection_closure(diag({pt(1, 1, 1)})) == diag({pt(1, 1, 1)}));
}

TEST_CASE("extents and ray extents") {
    CHECK(extents(example_diagram("minexam")) == Extents{3, 3, 3});
    CHECK(extents(diag({pt(1, 1, 1)})) == Extents{1, 1, 1});
    Diagram closure = example_diagram("closure");
    CHECK(ray_extents(closure, pt(1, 1, 1)) == RayExtents{3, 3, 3});
    CHECK(ray_extents(closure, pt(2, 2, 2)) == RayExtents{2, 2, 2});
    CHECK(code_of([&] { ray_extents(closure, pt(3, 3, 3)); }) == errc::precondition);
}

TEST_CASE("truncate removes one layer in place") {
    CHECK(truncate(cube(2, 2, 2), Axis::x, 2) ==
          diag({pt(1, 1, 1), pt(1, 1, 2), pt(1, 2, 1), pt(1, 2, 2)}));
    CHECK(truncate(example_diagram("closure"), Axis::x, 3).size() == 18 - 3);
    CHECK(code_of([] { truncate(diag({pt(1, 1, 1)}), Axis::z, 1); }) == errc::invalid_input);
}

TEST_CASE("tail drops lexicographic predecessors") {
    Diagram c = cube(2, 2, 2);
    Diagram t = tail(c, pt(1, 2, 1));
    CHECK(t.size() == 6);
    CHECK(!t.contains(pt(1, 1, 1)));
    CHECK(!t.contains(pt(1, 1, 2)));
    CHECK(t.contains(pt(1, 2, 1)));
    CHECK(tail(c, pt(1, 1, 1)) == c);
    CHECK(code_of([&] { tail(c, pt(3, 1, 1)); }) == errc::precondition);
}

TEST_CASE("flip is an involution preserving both predicates") {
    Diagram minexam = example_diagram("minexam");
    CHECK(flip(minexam) == minexam); // its generators are swap-symmetric
    for (const Diagram& d : all_ferrers_in_box(3, 3, 3)) {
        Diagram f = flip(d);
        CHECK(flip(f) == d);
        CHECK(is_ferrers(f));
        CHECK(has_projection_property(f) == has_projection_property(d));
    }
}

TEST_CASE("compress renames coordinates to consecutive ranks") {
    Diagram closure = example_diagram("closure");
    CHECK(compress(closure) == closure);
    Diagram gap = truncate(closure, Axis::y, 2);
    CHECK(!is_ferrers(gap));
    Diagram packed = compress(gap);
    CHECK(is_ferrers(packed));
    CHECK(packed.size() == gap.size());
}

TEST_CASE("zone decomposition at a layer-one point") {
    ZonePartition z = zones(cube(2, 2, 2), pt(1, 1, 1));
    CHECK(z.zone[0].empty());
    CHECK(z.zone[1] == std::vector<Point>{pt(1, 1, 2), pt(2, 1, 2)});
    CHECK(z.zone[2] == std::vector<Point>{pt(1, 1, 1), pt(2, 1, 1)});
    CHECK(z.zone[3] == std::vector<Point>{pt(1, 2, 2), pt(2, 2, 2)});
    CHECK(z.zone[4] == std::vector<Point>{pt(1, 2, 1), pt(2, 2, 1)});
    CHECK(z.zone[5].empty());

    ZonePartition single = zones(diag({pt(1, 1, 1)}), pt(1, 1, 1));
    CHECK(single.zone[2] == std::vector<Point>{pt(1, 1, 1)});
    for (int n : {0, 1, 3, 4, 5})
        CHECK(single.zone[static_cast<std::size_t>(n)].empty());

    CHECK(code_of([] { zones(cube(2, 2, 2), pt(2, 1, 1)); }) == errc::precondition);

    RandomSource rng(11);
    for (int n = 0; n < 50; ++n) {
        Diagram d = random_ferrers(3, 3, 3, rng);
        for (const Point& u : d.layer_one()) {
            ZonePartition part = zones(d, u);
            std::set<Point> seen;
            std::size_t total = 0;
            for (const auto& zone : part.zone) {
                total += zone.size();
                seen.insert(zone.begin(), zone.end());
            }
            CHECK(total == d.size());            // pairwise disjoint
            CHECK(seen.size() == d.size());      // union covers the diagram
            for (const Point& p : seen)
                CHECK(d.contains(p));
        }
    }
}

TEST_CASE("induction order follows the two-stage rule") {
    InductionOrder cube_order = induction_order(cube(2, 2, 2));
    CHECK(!cube_order.degenerate);
    CHECK(cube_order.points ==
          std::vector<Point>{pt(1, 1, 1), pt(1, 1, 2), pt(1, 2, 1), pt(1, 2, 2)});

    // Here the upper layers stop at height 1 while the diagram reaches height
    // 3, so the second stage is nonempty and ends at (1, b((1,1,3)), 3).
    Diagram two_stage = from_generators({pt(2, 2, 1), pt(1, 1, 3)});
    InductionOrder ord = induction_order(two_stage);
    CHECK(!ord.degenerate);
    CHECK(ord.points == std::vector<Point>{pt(1, 1, 1), pt(1, 2, 1), pt(1, 1, 2), pt(1, 1, 3)});
    CHECK(ord.points.back() == pt(1, 1, 3));

    InductionOrder flat = induction_order(cube(1, 2, 2));
    CHECK(flat.degenerate);
    CHECK(flat.points ==
          std::vector<Point>{pt(1, 1, 1), pt(1, 1, 2), pt(1, 2, 1), pt(1, 2, 2)});

    // Dominance: a coordinate-wise smaller layer-one point always precedes.
    RandomSource rng(12);
    for (int n = 0; n < 50; ++n) {
        Diagram d = random_ferrers(3, 4, 4, rng);
        if (extents(d).a < 2)
            continue;
        std::vector<Point> pts = induction_order(d).points;
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = 0; b < pts.size(); ++b)
                if (a != b && pts[a].j <= pts[b].j && pts[a].k <= pts[b].k)
                    CHECK(a < b);
    }
}

TEST_CASE("point classification and the phantom count") {
    Diagram c2 = cube(2, 2, 2);
    for (OrderKind kind : {OrderKind::lexicographic, OrderKind::induction}) {
        PointClassification cls = classify_points(c2, kind);
        CHECK(cls.phantom == std::vector<Point>{pt(1, 2, 2)});
        CHECK(cls.normal == std::vector<Point>{pt(1, 1, 1), pt(1, 1, 2), pt(1, 2, 1)});
    }
    CHECK(code_of([] { classify_points(diag({pt(1, 1, 1), pt(2, 2, 2)}), OrderKind::lexicographic); }) ==
          errc::precondition);

    RandomSource rng(13);
    for (int n = 0; n < 50; ++n) {
        Diagram d = random_projection_diagram(3, 3, 3, rng);
        PointClassification lex_cls = classify_points(d, OrderKind::lexicographic);
        PointClassification ind_cls = classify_points(d, OrderKind::induction);
        auto as_set = [](const std::vector<Point>& v) { return std::set<Point>(v.begin(), v.end()); };
        CHECK(as_set(lex_cls.phantom) == as_set(ind_cls.phantom));
        CHECK(as_set(lex_cls.normal) == as_set(ind_cls.normal));

        std::vector<Point> l1 = d.layer_one();
        std::set<Point> layer(l1.begin(), l1.end());
        std::set<Point> split(lex_cls.normal.begin(), lex_cls.normal.end());
        split.insert(lex_cls.phantom.begin(), lex_cls.phantom.end());
        CHECK(split == layer);
        CHECK(lex_cls.normal.size() + lex_cls.phantom.size() == layer.size());

        Extents e = extents(d);
        if (e.a >= 2) {
            Extents upper = extents(Diagram(d.upper_layers()));
            std::size_t formula =
                static_cast<std::size_t>((e.b - upper.b) + (e.c - upper.c) + 1);
            CHECK(lex_cls.phantom.size() == formula);
        }
    }
}

TEST_CASE("box enumeration matches the independent bitmask oracle") {
    CHECK(all_ferrers_in_box(2, 2, 2).size() == 19);

    std::vector<Diagram> box3 = all_ferrers_in_box(3, 3, 3);
    std::size_t projection = 0;
    std::set<std::vector<Point>> distinct;
    for (const Diagram& d : box3) {
        CHECK(is_ferrers(d));
        Extents e = extents(d);
        CHECK((e.a <= 3 && e.b <= 3 && e.c <= 3));
        distinct.insert(d.points());
        if (has_projection_property(d))
            ++projection;
    }
    CHECK(distinct.size() == box3.size());

    BoxCounts oracle = enumerate_box3_by_masks();
    CHECK(box3.size() == static_cast<std::size_t>(oracle.closed));
    CHECK(projection == static_cast<std::size_t>(oracle.projection));
    CHECK(box3.size() == 979);
    CHECK(projection == projection_count_3x3x3);
}

TEST_CASE("random draws are deterministic and stay in the box") {
    RandomSource a(99), b(99);
    for (int n = 0; n < 25; ++n) {
        Diagram da = random_ferrers(3, 3, 3, a);
        Diagram db = random_ferrers(3, 3, 3, b);
        CHECK(da == db);
        CHECK(is_ferrers(da));
        Extents e = extents(da);
        CHECK((e.a <= 3 && e.b <= 3 && e.c <= 3));
    }
    RandomSource c(7), d(7);
    for (int n = 0; n < 25; ++n) {
        Diagram dc = random_projection_diagram(4, 4, 4, c, 20);
        Diagram dd = random_projection_diagram(4, 4, 4, d, 20);
        CHECK(dc == dd);
        CHECK(has_projection_property(dc));
        CHECK(dc.size() <= 20);
    }
}

TEST_CASE("built-in example diagrams") {
    CHECK(example_diagram("minexam").size() == 16);
    CHECK(example_diagram("closure").size() == 18);
    CHECK(example_diagram("two-point") == diag({pt(1, 1, 1), pt(1, 1, 2)}));
    Diagram fg = example_diagram("five-gen");
    CHECK(is_ferrers(fg));
    CHECK(!has_projection_property(fg));
    CHECK(code_of([] { example_diagram("bogus"); }) == errc::invalid_input);
}
