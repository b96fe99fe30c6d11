#ifndef FERRERS3D_TESTS_HELPERS_HPP
#define FERRERS3D_TESTS_HELPERS_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ferrers3d/diagram.hpp"
#include "ferrers3d/groebner.hpp"
#include "ferrers3d/monomial.hpp"
#include "ferrers3d/simplicial.hpp"
#include "ferrers3d/toric.hpp"

namespace ferrers3d::tests {

inline Point pt(int i, int j, int k) { return Point{i, j, k}; }

inline Diagram diag(std::vector<Point> pts) { return Diagram(std::move(pts)); }

inline int tid(const UniversePtr& u, const Point& p) {
    int id = u->id_of(Var{Var::Kind::T, 0, p});
    if (id < 0)
        throw std::runtime_error("no T variable for " + to_string(p));
    return id;
}

inline Monomial tmon(const UniversePtr& u, const Point& p, int exp = 1) {
    return Monomial::var(u, tid(u, p), exp);
}

// Product of the T variables of several points, repetitions allowed.
inline Monomial tprod(const UniversePtr& u, const std::vector<Point>& ps) {
    Monomial m = Monomial::one(u);
    for (const Point& p : ps)
        m = mul(m, tmon(u, p));
    return m;
}

inline int rid(const UniversePtr& u, Var::Kind kind, int index) {
    int id = u->id_of(Var{kind, index, Point{}});
    if (id < 0)
        throw std::runtime_error("no ring variable with index " + std::to_string(index));
    return id;
}

inline Monomial rmon(const UniversePtr& u, Var::Kind kind, int index, int exp = 1) {
    return Monomial::var(u, rid(u, kind, index), exp);
}

// Exponent map of the substitution T_u -> x_i y_j z_k t, x -> x and so on,
// keyed by rendered variable name.  Equal maps on both sides of a binomial
// witness that it lies in the kernel of the corresponding monomial map.
inline std::map<std::string, int> image_of(const Monomial& m) {
    std::map<std::string, int> acc;
    for (const auto& [id, exp] : m.exponents()) {
        const Var& v = m.universe()->var(id);
        if (v.kind == Var::Kind::T) {
            acc["x" + std::to_string(v.point.i)] += exp;
            acc["y" + std::to_string(v.point.j)] += exp;
            acc["z" + std::to_string(v.point.k)] += exp;
            acc["t"] += exp;
        } else {
            acc[to_string(v)] += exp;
        }
    }
    return acc;
}

inline bool image_equal(const Binomial& b) { return image_of(b.lead) == image_of(b.trail); }

inline bool contains_binomial(const std::vector<Binomial>& v, const Binomial& b) {
    return std::find(v.begin(), v.end(), b) != v.end();
}

// Membership ignoring which side was chosen as the lead.
inline bool contains_unoriented(const std::vector<Binomial>& v, const Monomial& a,
                                const Monomial& b) {
    for (const Binomial& e : v)
        if ((e.lead == a && e.trail == b) || (e.lead == b && e.trail == a))
            return true;
    return false;
}

// The complex of the lex initial ideal of the switch relations.
inline SimplicialComplex delta_of(const Diagram& d) {
    TwoMinors i2 = two_minors(d);
    if (i2.elements.empty())
        return stanley_reisner(MonomialIdeal(i2.universe, {}));
    GroebnerBasis gb = buchberger(i2.elements, MonomialOrder::lex());
    return stanley_reisner(radical(initial_ideal(gb)));
}

inline VertexSet vset(const SimplicialComplex& c, const std::vector<std::string>& labels) {
    VertexSet s(c.label_count());
    for (const std::string& l : labels) {
        auto it = std::find(c.labels().begin(), c.labels().end(), l);
        if (it == c.labels().end())
            throw std::runtime_error("unknown vertex label " + l);
        s.set(static_cast<int>(it - c.labels().begin()));
    }
    return s;
}

// Renames T[(i,j,k)] to T[(i,k,j)] over the flipped diagram's universe.
inline Monomial flip_monomial(const Monomial& m, const UniversePtr& target) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [id, exp] : m.exponents()) {
        const Var& v = m.universe()->var(id);
        if (v.kind != Var::Kind::T)
            throw std::runtime_error("flip rename expects a T monomial");
        out.emplace_back(tid(target, Point{v.point.i, v.point.k, v.point.j}), exp);
    }
    return Monomial(target, std::move(out));
}

// Canonical form of a monomial set for order-insensitive comparison.
inline std::vector<std::vector<std::pair<int, int>>> exponent_set(const std::vector<Monomial>& v) {
    std::vector<std::vector<std::pair<int, int>>> out;
    for (const Monomial& m : v)
        out.push_back(m.exponents());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Monomial> leads_of(const std::vector<Binomial>& v) {
    std::vector<Monomial> out;
    for (const Binomial& b : v)
        out.push_back(b.lead);
    return out;
}

} // namespace ferrers3d::tests

#endif
