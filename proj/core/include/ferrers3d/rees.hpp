#ifndef FERRERS3D_REES_HPP
#define FERRERS3D_REES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ferrers3d/diagram.hpp"
#include "ferrers3d/groebner.hpp"
#include "ferrers3d/monomial.hpp"
#include "ferrers3d/toric.hpp"

namespace ferrers3d {

// The order used on the Rees presentation ring: the ring variables are
// compared by lex first, ties fall through to the chosen T order.  The lead
// of a linear binomial x_i T_k - x_j T_l is then the side with the greater
// ring variable.
MonomialOrder rees_order(const UniversePtr& joint, const MonomialOrder& t_order);

// Presentation of the Rees ideal over the joint universe (ring variables
// followed by the T variables).  When built by the exchange construction the
// basis is exactly toric_part plus linear_part, assembled under rees_order;
// the reduced flag reflects a structural verification (lead antichain,
// irreducible monomials), not an assumption.
struct ReesPresentation {
    Diagram diagram;
    MonomialOrder t_order;
    GroebnerBasis basis;
    std::vector<Binomial> linear_part;
    std::vector<Binomial> toric_part;
};

// Taylor syzygies of the point monomials: for every unordered pair,
// (lcm/f_k)T_k - (lcm/f_l)T_l, normalized under rees_order, deduplicated.
std::vector<Binomial> syzygy_linear_part(const Diagram& d);

// Rees basis from the exchange construction: the reduced T-order basis of the
// toric ideal plus every x_i T_k - x_j T_l with x_i > x_j, x_i f_k = x_j f_l
// and x_j the smallest ring variable with x_i f_k / x_j in the point ideal.
// "Smallest" refers to the global ring priority x1 > ... > y1 > ... > z1 ...
// Requires a downward closed diagram, which guarantees the exchange property.
ReesPresentation rees_via_exchange(const Diagram& d, const MonomialOrder& t_order,
                                   const BuchbergerOptions& opt = {});

// Independent pipeline: reduced basis of (T_u - f_u t : u in d) with t
// eliminated, re-expressed over the t-free joint universe under rees_order.
std::vector<Binomial> rees_oracle(const Diagram& d, const MonomialOrder& t_order,
                                  const BuchbergerOptions& opt = {});

// Exchange-condition scan over the standard monomials of the toric ideal.
// For every equal-degree pair whose images first differ at ring position q
// the literal condition asks for a generator f_k and a smaller variable x_j
// with x_q f_k / x_j in the point ideal; pairs without any witness are
// violations.  Witnesses whose generator index never divides the standard
// monomial on the deficient side are additionally logged, not judged.
struct ExchangeReport {
    bool ok = true;
    std::size_t pairs_checked = 0;
    std::vector<std::string> violations;
    std::vector<std::string> divisibility_notes;
};

ExchangeReport check_l_exchange(const Diagram& d, const MonomialOrder& t_order,
                                int degree_bound = 3, const BuchbergerOptions& opt = {},
                                std::size_t max_standard = 20000);

// Whether the Rees ideal equals the Taylor syzygies plus the extended toric
// ideal, decided by two-sided reduction against computed bases.
bool is_fiber_type(const Diagram& d, const BuchbergerOptions& opt = {});

} // namespace ferrers3d

#endif
