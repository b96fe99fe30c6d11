#ifndef FERRERS3D_GROEBNER_HPP
#define FERRERS3D_GROEBNER_HPP

#include <optional>
#include <vector>

#include "ferrers3d/monomial.hpp"

namespace ferrers3d {

// Resource guards for basis computations.  Exceeding a guard raises a
// resource_limit error instead of running unbounded.
struct Limits {
    int degree_cap = 12;
    std::size_t max_basis = 50000;
};

// Basis of a pure-difference binomial ideal.  The class of such ideals is
// closed under S-polynomials and reduction, so no field coefficients ever
// appear.  When reduced is set the elements form the reduced basis: leads
// form an antichain, tails are irreducible, elements are sorted by ascending
// lead.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Binomial> elements;
    bool reduced = false;
};

// Monomial ideal kept as its unique minimal (antichain) generating set,
// sorted by the ambient universe ids.
class MonomialIdeal {
    UniversePtr u_;
    std::vector<Monomial> gens_;

  public:
    MonomialIdeal(UniversePtr u, std::vector<Monomial> gens);

    const UniversePtr& universe() const noexcept { return u_; }
    const std::vector<Monomial>& gens() const noexcept { return gens_; }
    bool member(const Monomial& m) const;
    bool quadratic() const;   // every generator has degree 2
    bool squarefree() const;  // every generator is squarefree

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

// Normal form of a monomial: rewrite along basis elements while some lead
// divides it.  Each step strictly decreases the monomial, so this terminates.
Monomial reduce_monomial(Monomial m, const std::vector<Binomial>& basis, const MonomialOrder& o);

// Normal form of a binomial; nothing when it reduces to zero.
std::optional<Binomial> reduce(const Binomial& f, const std::vector<Binomial>& basis,
                               const MonomialOrder& o);

// S-polynomial, already normalized; nothing when it cancels.  When the leads
// are coprime the pair reduces to zero by the product criterion, and the
// caller may skip it.
std::optional<Binomial> s_pair(const Binomial& f, const Binomial& g, const MonomialOrder& o);

struct BuchbergerOptions {
    Limits limits{};
    bool chain_criterion = true;
};

// Deterministic Buchberger completion: pending pairs are processed by
// ascending lcm (ties by insertion index), the result is minimalized and
// tail-reduced.  Single-threaded by design.
GroebnerBasis buchberger(std::vector<Binomial> gens, const MonomialOrder& o,
                         const BuchbergerOptions& opt = {});

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

bool is_quadratic(const GroebnerBasis& gb);  // every element has degree 2
bool is_squarefree(const GroebnerBasis& gb); // every lead is squarefree

// Radical of a monomial ideal: the squarefree parts of the generators.
MonomialIdeal radical(const MonomialIdeal& i);

// Basis elements free of the masked variables; requires an order whose top
// block is exactly the mask, so that the result generates the elimination
// ideal.  The returned elements still live in the ambient universe.
std::vector<Binomial> eliminate(const std::vector<Binomial>& gens, const std::vector<bool>& vars,
                                const MonomialOrder& elim_order, const BuchbergerOptions& opt = {});

// Saturation of a binomial ideal at one variable: compute a reduced basis
// under an order making the variable cheapest in its degree class, strip the
// common variable power from every element, repeat until stable.  The
// generators must be homogeneous with respect to some positive grading (all
// our binomial ideals are graded by total T degree).
std::vector<Binomial> saturate_variable(std::vector<Binomial> gens, int var_id,
                                        const BuchbergerOptions& opt = {});

} // namespace ferrers3d

#endif
