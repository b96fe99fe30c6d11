#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ferrers3d/enumerate.hpp"
#include "ferrers3d/error.hpp"
#include "ferrers3d/runner.hpp"
#include "ferrers3d/simplicial.hpp"
#include "helpers.hpp"

using namespace ferrers3d;
using namespace ferrers3d::tests;

namespace {

int label_index(const SimplicialComplex& c, const std::string& l) {
    auto it = std::find(c.labels().begin(), c.labels().end(), l);
    REQUIRE(it != c.labels().end());
    return static_cast<int>(it - c.labels().begin());
}

SimplicialComplex slab_complex() {
    Diagram slab = from_generators({pt(2, 2, 1)});
    UniversePtr tu = t_universe(slab);
    return stanley_reisner(
        MonomialIdeal(tu, {tprod(tu, {pt(1, 1, 1), pt(2, 2, 1)})}));
}

// The antipodal identification of the icosahedron: ten triangles on six
// vertices whose geometric realization is the real projective plane.  It is
// Cohen-Macaulay over the rationals but not vertex decomposable.
SimplicialComplex projective_plane() {
    std::vector<std::string> v{"1", "2", "3", "4", "5", "6"};
    return SimplicialComplex(v, {{"1", "2", "3"},
                                 {"1", "2", "4"},
                                 {"1", "3", "5"},
                                 {"1", "4", "6"},
                                 {"1", "5", "6"},
                                 {"2", "3", "6"},
                                 {"2", "4", "5"},
                                 {"2", "5", "6"},
                                 {"3", "4", "5"},
                                 {"3", "4", "6"}});
}

} // namespace

TEST_CASE("vertex set mechanics") {
    VertexSet s(70);
    s.set(0);
    s.set(65);
    CHECK(s.count() == 2);
    CHECK(s.test(65));
    CHECK(!s.test(64));
    CHECK(s.members() == std::vector<int>{0, 65});
    VertexSet t(70);
    t.set(65);
    CHECK(t.subset_of(s));
    CHECK(!s.subset_of(t));
    CHECK(s.intersects(t));
    CHECK(s.minus(t).members() == std::vector<int>{0});
    CHECK(s.intersect(t) == t);
    CHECK(s.unite(t) == s);
    s.reset(0);
    CHECK(s == t);
    CHECK(!VertexSet(4).intersects(t));
    CHECK(VertexSet(4).empty());
}

TEST_CASE("independence complex of the slab switch") {
    SimplicialComplex c = slab_complex();
    CHECK(to_text(c) == "T[1,1,1],T[1,2,1],T[2,1,1]\n"
                        "T[1,2,1],T[2,1,1],T[2,2,1]\n");
    CHECK(c.dim() == 2);
    CHECK(c.pure());
    CHECK(!c.is_simplex());
    CHECK(c.vertices().count() == 4);
}

TEST_CASE("empty non-face ideal gives the full simplex") {
    UniversePtr tu = t_universe(from_generators({pt(2, 2, 1)}));
    SimplicialComplex full = stanley_reisner(MonomialIdeal(tu, {}));
    CHECK(full.is_simplex());
    CHECK(full.dim() == 3);
    CHECK(cone_apexes(full) == full.vertices());

    CHECK_THROWS_AS(stanley_reisner(MonomialIdeal(tu, {tmon(tu, pt(1, 1, 1), 2)})), error);
}

TEST_CASE("link deletion restriction") {
    SimplicialComplex c = slab_complex();
    SimplicialComplex lk = link(c, label_index(c, "T[1,2,1]"));
    CHECK(to_text(lk) == "T[1,1,1],T[2,1,1]\n"
                         "T[2,1,1],T[2,2,1]\n");
    CHECK(lk.dim() == 1);

    SimplicialComplex del = deletion(c, label_index(c, "T[1,1,1]"));
    CHECK(to_text(del) == "T[1,2,1],T[2,1,1],T[2,2,1]\n");
    CHECK(del.dim() == 2); // the shedding dimension condition for T[1,1,1]

    SimplicialComplex res = restriction(c, vset(c, {"T[1,1,1]", "T[1,2,1]", "T[2,1,1]"}));
    CHECK(to_text(res) == "T[1,1,1],T[1,2,1],T[2,1,1]\n");

    CHECK_THROWS_AS(link(c, 99), error);
}

TEST_CASE("phantom points are cone apexes of their tail complex") {
    Diagram c2 = from_generators({pt(2, 2, 2)});
    PointClassification cls = classify_points(c2, OrderKind::lexicographic);
    REQUIRE(cls.phantom == std::vector<Point>{pt(1, 2, 2)});
    for (const Point& u : cls.phantom) {
        SimplicialComplex delta = delta_of(tail(c2, u));
        VertexSet apexes = cone_apexes(delta);
        CHECK(apexes.test(label_index(delta, "T[" + std::to_string(u.i) + "," +
                                                 std::to_string(u.j) + "," +
                                                 std::to_string(u.k) + "]")));
    }
}

TEST_CASE("restriction to a tail equals the recomputed complex") {
    Diagram closure = example_diagram("closure");
    SimplicialComplex whole = delta_of(closure);
    for (const Point& w : closure.layer_one()) {
        Diagram t = tail(closure, w);
        VertexSet keep(whole.label_count());
        for (const Point& p : t.points())
            keep.set(label_index(whole, "T[" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                            "," + std::to_string(p.k) + "]"));
        CHECK(to_text(restriction(whole, keep)) == to_text(delta_of(t)));
    }
}

TEST_CASE("vertex decomposability certificates") {
    UniversePtr tu = t_universe(from_generators({pt(2, 2, 1)}));
    SimplicialComplex full = stanley_reisner(MonomialIdeal(tu, {}));
    VDCertificate trivial = is_vertex_decomposable(full);
    CHECK(trivial.decomposable);
    CHECK(trivial.shedding_sequence.empty());

    SimplicialComplex slab = slab_complex();
    VDCertificate cert = is_vertex_decomposable(slab);
    CHECK(cert.decomposable);
    CHECK(!cert.shedding_sequence.empty());
    CHECK(replay_vd(slab, cert));

    // Deleting T[1,2,1] drops the dimension, so it can never be shed first.
    VDCertificate tampered = cert;
    tampered.shedding_sequence.assign(1, "T[1,2,1]");
    CHECK(!replay_vd(slab, tampered));

    SimplicialComplex lopsided({"a", "b", "c"}, {{"a", "b"}, {"c"}});
    VDCertificate bad = is_vertex_decomposable(lopsided);
    CHECK(!bad.decomposable);
    CHECK(bad.failure_witness.find("not pure") != std::string::npos);
}

TEST_CASE("the projective plane separates the two certificates") {
    SimplicialComplex rp2 = projective_plane();
    CHECK(rp2.pure());
    CHECK(rp2.dim() == 2);
    CHECK(!is_vertex_decomposable(rp2).decomposable);
    CHECK(reisner_cm(rp2).cm); // rational homology of every link vanishes below top
}

TEST_CASE("reisner criterion") {
    UniversePtr tu = t_universe(from_generators({pt(2, 2, 1)}));
    CHECK(reisner_cm(stanley_reisner(MonomialIdeal(tu, {}))).cm);
    CHECK(reisner_cm(slab_complex()).cm);

    SimplicialComplex cycle({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(reisner_cm(cycle).cm);

    SimplicialComplex split({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CMReport bad = reisner_cm(split);
    CHECK(!bad.cm);
    CHECK(!bad.witness.empty());
}

TEST_CASE("closure complex is pure decomposable of dimension six") {
    SimplicialComplex delta = delta_of(example_diagram("closure"));
    CHECK(delta.dim() == 6);
    CHECK(delta.pure());
    VDCertificate cert = is_vertex_decomposable(delta);
    CHECK(cert.decomposable);
    CHECK(replay_vd(delta, cert));
    CHECK(reisner_cm(delta).cm);
}

TEST_CASE("the axis points span a facet") {
    RandomSource rng(41);
    std::vector<Diagram> cases{example_diagram("closure"), from_generators({pt(2, 2, 2)})};
    for (int n = 0; n < 5; ++n)
        cases.push_back(random_ferrers(3, 3, 3, rng));
    for (const Diagram& d : cases) {
        SimplicialComplex delta = delta_of(d);
        Extents e = extents(d);
        VertexSet axis(delta.label_count());
        auto set_point = [&](int i, int j, int k) {
            axis.set(label_index(delta, "T[" + std::to_string(i) + "," + std::to_string(j) + "," +
                                            std::to_string(k) + "]"));
        };
        set_point(1, 1, 1);
        for (int i = 2; i <= e.a; ++i)
            set_point(i, 1, 1);
        for (int j = 2; j <= e.b; ++j)
            set_point(1, j, 1);
        for (int k = 2; k <= e.c; ++k)
            set_point(1, 1, k);
        bool found = false;
        for (const VertexSet& f : delta.facets())
            found = found || f == axis;
        CHECK(found);
    }
}

TEST_CASE("dimension bridge to the diagram extents") {
    RandomSource rng(42);
    for (int n = 0; n < 10; ++n) {
        Diagram d = random_projection_diagram(3, 3, 3, rng);
        Extents e = extents(d);
        SimplicialComplex delta = delta_of(d);
        CHECK(delta.dim() + 1 == e.a + e.b + e.c - 2);
        CHECK(delta.pure());
    }
}
