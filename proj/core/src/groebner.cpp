#include "ferrers3d/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ferrers3d/error.hpp"

namespace ferrers3d {

MonomialIdeal::MonomialIdeal(UniversePtr u, std::vector<Monomial> gens) : u_(std::move(u)) {
    for (const Monomial& g : gens)
        if (!same_universe(g.universe(), u_))
            fail(errc::invalid_input, "monomial ideal generator from a foreign universe");
    // Keep only the divisibility-minimal generators.
    for (std::size_t a = 0; a < gens.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < gens.size() && !redundant; ++b) {
            if (a == b)
                continue;
            if (divides(gens[b], gens[a]) && !(gens[a] == gens[b] && b > a))
                redundant = true;
        }
        if (!redundant)
            gens_.push_back(gens[a]);
    }
    std::sort(gens_.begin(), gens_.end(),
              [](const Monomial& l, const Monomial& r) { return l.exponents() < r.exponents(); });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

bool MonomialIdeal::member(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (divides(g, m))
            return true;
    return false;
}

bool MonomialIdeal::quadratic() const {
    for (const Monomial& g : gens_)
        if (g.total_degree() != 2)
            return false;
    return true;
}

bool MonomialIdeal::squarefree() const {
    for (const Monomial& g : gens_)
        if (!g.squarefree())
            return false;
    return true;
}

Monomial reduce_monomial(Monomial m, const std::vector<Binomial>& basis, const MonomialOrder& o) {
    (void)o;
    bool again = true;
    while (again) {
        again = false;
        for (const Binomial& g : basis) {
            if (divides(g.lead, m)) {
                m = mul(quotient(m, g.lead), g.trail);
                again = true;
                break;
            }
        }
    }
    return m;
}

std::optional<Binomial> reduce(const Binomial& f, const std::vector<Binomial>& basis,
                               const MonomialOrder& o) {
    Monomial l = reduce_monomial(f.lead, basis, o);
    Monomial t = reduce_monomial(f.trail, basis, o);
    return normalize(l, t, o);
}

std::optional<Binomial> s_pair(const Binomial& f, const Binomial& g, const MonomialOrder& o) {
    Monomial l = lcm(f.lead, g.lead);
    return normalize(mul(quotient(l, f.lead), f.trail), mul(quotient(l, g.lead), g.trail), o);
}

namespace {

void enforce_limits(const Binomial& b, const Limits& lim, std::size_t basis_size,
                    std::size_t pending_size) {
    if (degree(b) > lim.degree_cap)
        fail(errc::resource_limit,
             "degree cap exceeded: element of degree " + std::to_string(degree(b)) +
                 " with cap " + std::to_string(lim.degree_cap) +
                 " (raise the cap to continue this computation)");
    if (basis_size > lim.max_basis)
        fail(errc::resource_limit, "basis size cap exceeded at " + std::to_string(basis_size));
    // The pending set grows quadratically in the basis; trip before memory does.
    if (pending_size > 40 * lim.max_basis)
        fail(errc::resource_limit,
             "pending pair cap exceeded at " + std::to_string(pending_size));
}

struct PairEntry {
    Monomial lcm_;
    std::size_t i, j;
};

// Normal selection: smallest lcm degree first, the order itself only breaks
// ties. Lex and product orders are not graded, so ordering pending pairs by
// the order alone lets the completion dive into deep monomials long before
// the cheap pairs are gone; degree-first selection keeps it level by level.
int pair_cmp(const PairEntry& l, const PairEntry& r, const MonomialOrder& o) {
    int dl = l.lcm_.total_degree(), dr = r.lcm_.total_degree();
    if (dl != dr)
        return dl < dr ? -1 : 1;
    return o.compare(l.lcm_, r.lcm_);
}

// Deterministic interreduction: drop elements with redundant leads, rewrite
// every survivor to normal form against the others, iterate until stable.
std::vector<Binomial> interreduce(std::vector<Binomial> g, const MonomialOrder& o) {
    for (;;) {
        // Minimalize leads: keep the first element for equal leads.
        std::vector<Binomial> kept;
        for (std::size_t a = 0; a < g.size(); ++a) {
            bool drop = false;
            for (std::size_t b = 0; b < g.size() && !drop; ++b) {
                if (a == b)
                    continue;
                if (!divides(g[b].lead, g[a].lead))
                    continue;
                if (g[b].lead == g[a].lead)
                    drop = b < a;
                else
                    drop = true;
            }
            if (!drop)
                kept.push_back(g[a]);
        }
        bool changed = kept.size() != g.size();
        g = std::move(kept);
        for (std::size_t a = 0; a < g.size(); ++a) {
            std::vector<Binomial> others;
            others.reserve(g.size() - 1);
            for (std::size_t b = 0; b < g.size(); ++b)
                if (b != a)
                    others.push_back(g[b]);
            auto nf = reduce(g[a], others, o);
            if (!nf) {
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(a));
                changed = true;
                break;
            }
            if (!(*nf == g[a])) {
                g[a] = *nf;
                changed = true;
            }
        }
        if (!changed)
            break;
    }
    std::sort(g.begin(), g.end(), [&](const Binomial& l, const Binomial& r) {
        int c = o.compare(l.lead, r.lead);
        if (c != 0)
            return c < 0;
        return o.compare(l.trail, r.trail) < 0;
    });
    return g;
}

} // namespace

GroebnerBasis buchberger(std::vector<Binomial> gens, const MonomialOrder& o,
                         const BuchbergerOptions& opt) {
    // Normalize the input: drop zero reductions and duplicates, fixed order.
    std::vector<Binomial> g;
    for (const Binomial& b : gens) {
        auto nf = normalize(b.lead, b.trail, o);
        if (nf && std::find(g.begin(), g.end(), *nf) == g.end())
            g.push_back(*nf);
    }
    std::sort(g.begin(), g.end(), [&](const Binomial& l, const Binomial& r) {
        int c = o.compare(l.lead, r.lead);
        if (c != 0)
            return c < 0;
        return o.compare(l.trail, r.trail) < 0;
    });

    auto pair_less = [&](const PairEntry& l, const PairEntry& r) {
        int c = pair_cmp(l, r, o);
        if (c != 0)
            return c < 0;
        return std::tie(l.i, l.j) < std::tie(r.i, r.j);
    };
    std::set<PairEntry, decltype(pair_less)> pending(pair_less);
    std::set<std::pair<std::size_t, std::size_t>> pending_keys;

    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (coprime(g[i].lead, g[j].lead))
                continue; // product criterion
            pending.insert(PairEntry{lcm(g[i].lead, g[j].lead), i, j});
            pending_keys.insert({i, j});
        }
    };
    for (std::size_t j = 0; j < g.size(); ++j)
        push_pairs_for(j);

    while (!pending.empty()) {
        PairEntry p = *pending.begin();
        pending.erase(pending.begin());
        pending_keys.erase({p.i, p.j});

        if (opt.chain_criterion) {
            // Skip when a third lead divides the pair lcm strictly and both
            // side pairs are no longer pending.
            bool skip = false;
            for (std::size_t k = 0; k < g.size() && !skip; ++k) {
                if (k == p.i || k == p.j)
                    continue;
                if (!divides(g[k].lead, p.lcm_))
                    continue;
                auto key = [](std::size_t a, std::size_t b) {
                    return std::pair{std::min(a, b), std::max(a, b)};
                };
                if (pending_keys.count(key(p.i, k)) || pending_keys.count(key(p.j, k)))
                    continue;
                if (lcm(g[p.i].lead, g[k].lead) == p.lcm_ || lcm(g[p.j].lead, g[k].lead) == p.lcm_)
                    continue;
                skip = true;
            }
            if (skip)
                continue;
        }

        auto s = s_pair(g[p.i], g[p.j], o);
        if (!s)
            continue;
        auto nf = reduce(*s, g, o);
        if (!nf)
            continue;
        enforce_limits(*nf, opt.limits, g.size() + 1, pending.size());
        g.push_back(*nf);
        push_pairs_for(g.size() - 1);
    }

    GroebnerBasis out{o, interreduce(std::move(g), o), true};
    return out;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    if (gb.elements.empty())
        fail(errc::invalid_input, "initial ideal of an empty basis has no universe");
    std::vector<Monomial> leads;
    leads.reserve(gb.elements.size());
    for (const Binomial& b : gb.elements)
        leads.push_back(b.lead);
    return MonomialIdeal(gb.elements.front().lead.universe(), std::move(leads));
}

bool is_quadratic(const GroebnerBasis& gb) {
    for (const Binomial& b : gb.elements)
        if (degree(b) != 2)
            return false;
    return true;
}

bool is_squarefree(const GroebnerBasis& gb) {
    for (const Binomial& b : gb.elements)
        if (!b.lead.squarefree())
            return false;
    return true;
}

MonomialIdeal radical(const MonomialIdeal& i) {
    std::vector<Monomial> gens;
    gens.reserve(i.gens().size());
    for (const Monomial& g : i.gens()) {
        std::vector<std::pair<int, int>> e;
        for (const auto& [id, exp] : g.exponents())
            e.emplace_back(id, 1);
        gens.emplace_back(i.universe(), std::move(e));
    }
    return MonomialIdeal(i.universe(), std::move(gens));
}

std::vector<Binomial> eliminate(const std::vector<Binomial>& gens, const std::vector<bool>& vars,
                                const MonomialOrder& elim_order, const BuchbergerOptions& opt) {
    if (!elim_order.eliminates(vars))
        fail(errc::precondition, "order does not eliminate the requested block");
    GroebnerBasis gb = buchberger(gens, elim_order, opt);
    std::vector<Binomial> kept;
    auto touches = [&](const Monomial& m) {
        for (const auto& [id, exp] : m.exponents())
            if (static_cast<std::size_t>(id) < vars.size() && vars[static_cast<std::size_t>(id)])
                return true;
        return false;
    };
    for (const Binomial& b : gb.elements)
        if (!touches(b.lead) && !touches(b.trail))
            kept.push_back(b);
    return kept;
}

std::vector<Binomial> saturate_variable(std::vector<Binomial> gens, int var_id,
                                        const BuchbergerOptions& opt) {
    if (gens.empty())
        return gens;
    const UniversePtr& u = gens.front().lead.universe();
    std::vector<bool> others(static_cast<std::size_t>(u->size()), true);
    others[static_cast<std::size_t>(var_id)] = false;
    // Everything else first by grevlex, the chosen variable only breaks ties:
    // on monomials of equal degree this behaves like grevlex with the
    // variable last, which is what the one-pass saturation step needs.
    MonomialOrder o =
        MonomialOrder::product(others, MonomialOrder::grevlex(), MonomialOrder::lex());
    for (;;) {
        GroebnerBasis gb = buchberger(gens, o, opt);
        bool changed = false;
        std::vector<Binomial> next;
        for (const Binomial& b : gb.elements) {
            int m = std::min(b.lead.degree_of(var_id), b.trail.degree_of(var_id));
            if (m == 0) {
                next.push_back(b);
                continue;
            }
            changed = true;
            Monomial power = Monomial::var(u, var_id, m);
            auto nf = normalize(quotient(b.lead, power), quotient(b.trail, power), o);
            if (nf)
                next.push_back(*nf);
        }
        if (!changed)
            return gb.elements;
        gens = std::move(next);
    }
}

} // namespace ferrers3d
