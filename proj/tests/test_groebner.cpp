#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ferrers3d/error.hpp"
#include "ferrers3d/groebner.hpp"
#include "ferrers3d/runner.hpp"
#include "ferrers3d/toric.hpp"
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

Binomial mk(const Monomial& l, const Monomial& r, const MonomialOrder& o) {
    auto b = normalize(l, r, o);
    REQUIRE(b.has_value());
    return *b;
}

// The defining property of a Groebner basis, checked literally: every S-pair
// of basis elements reduces to zero against the basis.
void check_buchberger_criterion(const GroebnerBasis& gb) {
    for (std::size_t a = 0; a < gb.elements.size(); ++a)
        for (std::size_t b = a + 1; b < gb.elements.size(); ++b) {
            auto s = s_pair(gb.elements[a], gb.elements[b], gb.order);
            if (!s)
                continue;
            CHECK(!reduce(*s, gb.elements, gb.order).has_value());
        }
}

void check_reduced(const GroebnerBasis& gb) {
    CHECK(gb.reduced);
    for (std::size_t a = 0; a < gb.elements.size(); ++a) {
        for (std::size_t b = 0; b < gb.elements.size(); ++b) {
            if (a == b)
                continue;
            CHECK(!divides(gb.elements[b].lead, gb.elements[a].lead));
            CHECK(!divides(gb.elements[b].lead, gb.elements[a].trail));
        }
    }
}

} // namespace

TEST_CASE("reduce computes normal forms") {
    Diagram slab = from_generators({pt(2, 2, 1)});
    UniversePtr tu = t_universe(slab);
    MonomialOrder lex = MonomialOrder::lex();
    Binomial quadric = mk(tprod(tu, {pt(1, 1, 1), pt(2, 2, 1)}),
                          tprod(tu, {pt(1, 2, 1), pt(2, 1, 1)}), lex);

    CHECK(!reduce(quadric, {quadric}, lex).has_value());
    auto untouched = reduce(quadric, {}, lex);
    REQUIRE(untouched.has_value());
    CHECK(*untouched == quadric);

    // One division step makes the two sides equal, so the normal form is zero.
    Binomial f = mk(mul(quadric.lead, tmon(tu, pt(2, 1, 1))),
                    mul(tmon(tu, pt(2, 1, 1), 2), tmon(tu, pt(1, 2, 1))), lex);
    CHECK(!reduce(f, {quadric}, lex).has_value());
}

TEST_CASE("s_pair matches the hand computation") {
    UniversePtr ru = ring_universe(from_generators({pt(3, 1, 1)}), false); // x1 > x2 > x3
    MonomialOrder lex = MonomialOrder::lex();
    Monomial x1 = rmon(ru, Var::Kind::x, 1), x2 = rmon(ru, Var::Kind::x, 2),
             x3 = rmon(ru, Var::Kind::x, 3);
    Binomial f = mk(mul(x1, x2), mul(x3, x3), lex);
    Binomial g = mk(mul(x2, x3), mul(x1, x1), lex);
    CHECK(g.lead == mul(x1, x1)); // lex ranks x1^2 above x2 x3

    auto s = s_pair(f, g, lex);
    REQUIRE(s.has_value());
    CHECK(s->lead == mul(x1, mul(x3, x3)));
    CHECK(s->trail == mul(mul(x2, x2), x3));
    CHECK(!s_pair(f, f, lex).has_value());
}

TEST_CASE("buchberger on pinned inputs") {
    MonomialOrder lex = MonomialOrder::lex();

    Diagram slab = from_generators({pt(2, 2, 1)});
    std::vector<Binomial> i2 = two_minors(slab).elements;
    REQUIRE(i2.size() == 1);
    GroebnerBasis slab_gb = buchberger(i2, lex);
    CHECK(slab_gb.elements == i2);
    CHECK(slab_gb.reduced);
    CHECK(is_quadratic(slab_gb));

    GroebnerBasis closure_gb = buchberger(two_minors(example_diagram("closure")).elements, lex);
    CHECK(is_quadratic(closure_gb));
    CHECK(is_squarefree(closure_gb));
    check_reduced(closure_gb);
    check_buchberger_criterion(closure_gb);

    GroebnerBasis minexam_gb = buchberger(two_minors(example_diagram("minexam")).elements, lex);
    check_reduced(minexam_gb);
    check_buchberger_criterion(minexam_gb);
    for (const Binomial& b : minexam_gb.elements) // T-homogeneous input, homogeneous basis
        CHECK(b.lead.total_degree() == b.trail.total_degree());

    GroebnerBasis repeat = buchberger(two_minors(example_diagram("minexam")).elements, lex);
    CHECK(repeat.elements == minexam_gb.elements);
}

TEST_CASE("initial ideal and flags") {
    MonomialOrder lex = MonomialOrder::lex();
    GroebnerBasis gb = buchberger(two_minors(example_diagram("closure")).elements, lex);
    MonomialIdeal in = initial_ideal(gb);
    CHECK(in.quadratic());
    CHECK(in.squarefree());
    CHECK(in.gens().size() == gb.elements.size());
    for (std::size_t a = 0; a < in.gens().size(); ++a)
        for (std::size_t b = 0; b < in.gens().size(); ++b)
            if (a != b)
                CHECK(!divides(in.gens()[a], in.gens()[b]));
    CHECK(in.member(mul(in.gens().front(), in.gens().back())));
    CHECK(!in.member(Monomial::one(in.universe())));
}

TEST_CASE("monomial ideals minimalize and radicals strip exponents") {
    UniversePtr tu = t_universe(from_generators({pt(2, 2, 1)}));
    Monomial a = tmon(tu, pt(1, 1, 1));
    Monomial ab = mul(a, tmon(tu, pt(1, 2, 1)));

    MonomialIdeal keep(tu, {Monomial(tu, {{tid(tu, pt(1, 1, 1)), 2}}), ab});
    CHECK(keep.gens().size() == 2); // neither generator divides the other
    CHECK(!keep.squarefree());
    MonomialIdeal rad = radical(keep);
    CHECK(rad.gens() == std::vector<Monomial>{a}); // T111 swallows T111*T121

    MonomialIdeal collapse(tu, {a, ab});
    CHECK(collapse.gens() == std::vector<Monomial>{a});
}

TEST_CASE("eliminate rejects an order that keeps the block visible") {
    Diagram two = example_diagram("two-point");
    UniversePtr ju = joint_universe(two, false);
    std::vector<bool> ring = mask_of(*ju, [](const Var& v) { return v.kind != Var::Kind::T; });
    std::vector<Binomial> gens{
        mk(tmon(ju, pt(1, 1, 1)), mul(mul(rmon(ju, Var::Kind::x, 1), rmon(ju, Var::Kind::y, 1)),
                                      rmon(ju, Var::Kind::z, 1)),
           MonomialOrder::product(ring, MonomialOrder::grevlex(), MonomialOrder::lex()))};
    CHECK(code_of([&] { eliminate(gens, ring, MonomialOrder::lex()); }) == errc::precondition);
}

TEST_CASE("saturation divides out the variable to a fixed point") {
    Diagram chain = from_generators({pt(1, 1, 4)});
    UniversePtr tu = t_universe(chain);
    MonomialOrder lex = MonomialOrder::lex();
    Binomial core = mk(tprod(tu, {pt(1, 1, 1), pt(1, 1, 3)}), tmon(tu, pt(1, 1, 2), 2), lex);
    Binomial padded = mk(mul(core.lead, tmon(tu, pt(1, 1, 4))),
                         mul(core.trail, tmon(tu, pt(1, 1, 4))), lex);

    // The result is oriented under the internal saturation order, so compare
    // the monomial pairs rather than the normalized binomials.
    std::vector<Binomial> sat = saturate_variable({padded}, tid(tu, pt(1, 1, 4)));
    REQUIRE(sat.size() == 1);
    CHECK(contains_unoriented(sat, core.lead, core.trail));

    Diagram slab = from_generators({pt(2, 2, 1)});
    UniversePtr su = t_universe(slab);
    std::vector<Binomial> i2 = two_minors(slab).elements;
    std::vector<Binomial> kept = saturate_variable(i2, tid(su, pt(1, 1, 1)));
    REQUIRE(kept.size() == 1);
    CHECK(contains_unoriented(kept, i2.front().lead, i2.front().trail));
}

TEST_CASE("resource guards abort instead of running away") {
    Diagram minexam = example_diagram("minexam");
    BuchbergerOptions capped;
    capped.limits.degree_cap = 3;
    CHECK(code_of([&] { toric_ideal(minexam, MonomialOrder::lex(), ToricPipeline::elimination,
                                    capped); }) == errc::resource_limit);

    BuchbergerOptions tiny;
    tiny.limits.max_basis = 5;
    CHECK(code_of([&] { buchberger(two_minors(minexam).elements, MonomialOrder::lex(), tiny); }) ==
          errc::resource_limit);
}
