#ifndef FERRERS3D_TORIC_HPP
#define FERRERS3D_TORIC_HPP

#include <string>
#include <vector>

#include "ferrers3d/diagram.hpp"
#include "ferrers3d/groebner.hpp"
#include "ferrers3d/monomial.hpp"

namespace ferrers3d {

// The monomial x_i y_j z_k attached to a point, optionally times t.  The
// universe must contain the required ring variables.
Monomial ring_image(const Point& u, const UniversePtr& universe, bool with_t = false);

// Quadratic relations obtained by switching one coordinate between two points
// when both partner points of the switch belong to the diagram.  Normalized
// under lex on the T universe, deduplicated, sorted.
struct TwoMinors {
    Diagram diagram;
    UniversePtr universe;
    std::vector<Binomial> elements;
};

TwoMinors two_minors(const Diagram& d);

enum class ToricPipeline { elimination, lattice };

// Kernel of T_u -> x_i y_j z_k as a reduced basis over the T universe.
// The elimination pipeline works in the joint ring and projects; the lattice
// pipeline saturates a lattice basis ideal inside the T universe.  Both give
// the same reduced basis and are cross-checked in the tests.
GroebnerBasis toric_ideal(const Diagram& d, const MonomialOrder& t_order,
                          ToricPipeline pipeline = ToricPipeline::elimination,
                          const BuchbergerOptions& opt = {});

// Integer kernel basis of the exponent matrix of the point images; every
// column lists the coefficient of one point.
std::vector<std::vector<long long>> lattice_kernel_basis(const Diagram& d);

// Every normalized binomial T^a - T^b with equal images and degree at most
// the bound.  Independent of any basis computation; quadratic in the number
// of enumerated monomials, so guarded.
std::vector<Binomial> toric_bruteforce(const Diagram& d, int degree_bound,
                                       const MonomialOrder& t_order,
                                       std::size_t max_monomials = 2000000);

// Two-sided membership test between the ideals spanned by two bases.
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

// Same test from plain generator lists; bases are completed internally.
bool ideal_equal(const std::vector<Binomial>& a, const std::vector<Binomial>& b,
                 const MonomialOrder& o, const BuchbergerOptions& opt = {});

struct CheckReport {
    bool ok = true;
    std::vector<std::string> witnesses;
};

// The degree two part of the toric ideal coincides with the switch relations:
// compares the brute-force degree two binomials with two_minors as sets.
CheckReport degree2_check(const Diagram& d, const BuchbergerOptions& opt = {});

// For a sub-diagram g of d (a layer truncation or a tail): the toric ideal of
// d restricted to the surviving T variables equals the toric ideal of g, and
// the minimal generators of the lex initial ideal restrict the same way.
CheckReport restriction_check(const Diagram& d, const Diagram& g, const BuchbergerOptions& opt = {});

// Same check with the reduced lex basis of d supplied by the caller, for use
// when many sub-diagrams of one parent are checked in a row.
CheckReport restriction_check(const Diagram& d, const GroebnerBasis& jd, const Diagram& g,
                              const BuchbergerOptions& opt = {});

enum class CertKind { koszul, normal, prime_instance, fiber_dim, codim };

std::string to_string(CertKind k);

// A verdict with a witness that can be re-verified: the basis element or
// facet justifying it, or the counterexample refuting it.
struct Certificate {
    CertKind kind;
    bool verdict = false;
    std::string witness;
    double elapsed_ms = 0;
};

// Certificate kinds whose hypotheses d satisfies; the dimension formulas
// require a downward closed diagram.
std::vector<CertKind> applicable_kinds(const Diagram& d);

std::vector<Certificate> certificates(const Diagram& d, const std::vector<CertKind>& kinds,
                                      const BuchbergerOptions& opt = {});

// Largest degree of a minimal generator of the homogeneous ideal spanned by
// a reduced basis (0 for the zero ideal).
int max_minimal_generator_degree(const GroebnerBasis& gb, const BuchbergerOptions& opt = {});

// Whether f is irreducible against the ideal spanned by the basis elements of
// strictly smaller degree, i.e. f is needed as a generator in its degree.
bool is_minimal_generator(const Binomial& f, const GroebnerBasis& gb,
                          const BuchbergerOptions& opt = {});

} // namespace ferrers3d

#endif
