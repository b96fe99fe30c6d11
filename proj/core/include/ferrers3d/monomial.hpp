#ifndef FERRERS3D_MONOMIAL_HPP
#define FERRERS3D_MONOMIAL_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ferrers3d/diagram.hpp"
#include "ferrers3d/point.hpp"

namespace ferrers3d {

// Variable descriptor.  Ring variables carry a 1-based index (t carries
// none), T variables carry the diagram point they belong to.
struct Var {
    enum class Kind { x, y, z, t, T };
    Kind kind = Kind::t;
    int index = 0;
    Point point;

    friend bool operator==(const Var& l, const Var& r) {
        if (l.kind != r.kind)
            return false;
        return l.kind == Kind::T ? l.point == r.point : l.index == r.index;
    }
};

std::string to_string(const Var& v);

// Ordered list of variables; the position in the list is the priority, so the
// variable at index 0 is the greatest.  Universes are immutable and shared.
class VarUniverse {
    std::vector<Var> vars_;

  public:
    explicit VarUniverse(std::vector<Var> vars);

    int size() const noexcept { return static_cast<int>(vars_.size()); }
    const Var& var(int id) const { return vars_[static_cast<std::size_t>(id)]; }
    const std::vector<Var>& vars() const noexcept { return vars_; }
    int id_of(const Var& v) const; // -1 when absent
    std::string name(int id) const { return to_string(var(id)); }

    friend bool operator==(const VarUniverse&, const VarUniverse&);
};

using UniversePtr = std::shared_ptr<const VarUniverse>;

bool same_universe(const UniversePtr& a, const UniversePtr& b);

// T variables of the diagram's points in lexicographic point order, so the
// lexicographically first point owns the greatest variable.
UniversePtr t_universe(const Diagram& d);

// x_1..x_m > y_1..y_n > z_1..z_p (> t), sized by the maximal coordinates.
UniversePtr ring_universe(const Diagram& d, bool with_t);

// Ring block first, then the T block: x.. > y.. > z.. (> t) > T...
UniversePtr joint_universe(const Diagram& d, bool with_t);

// Monomial with nonnegative exponents over a fixed universe, stored as a
// sorted sparse (id, exponent) list.
class Monomial {
    UniversePtr u_;
    std::vector<std::pair<int, int>> e_;

  public:
    Monomial(UniversePtr u, std::vector<std::pair<int, int>> exps);
    static Monomial one(UniversePtr u);
    static Monomial var(UniversePtr u, int id, int exp = 1);

    const UniversePtr& universe() const noexcept { return u_; }
    const std::vector<std::pair<int, int>>& exponents() const noexcept { return e_; }
    bool is_one() const noexcept { return e_.empty(); }
    int total_degree() const;
    int degree_of(int id) const;
    bool squarefree() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.e_ == b.e_ && same_universe(a.u_, b.u_);
    }
};

Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);      // a | b
Monomial quotient(const Monomial& b, const Monomial& a); // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// Re-expresses a monomial over another universe, matching variables by
// descriptor.  Fails when some variable of the support is absent.
Monomial embed(const Monomial& m, const UniversePtr& target);

std::string to_string(const Monomial& m);

std::uint64_t fingerprint(const Monomial& m);

// Comparison tree: lex and grevlex leaves evaluate on the variables visible
// at their position, product nodes compare the masked block first and fall
// through to the rest on ties.  Block elimination is a product whose first
// component is the eliminated block, hence every monomial meeting the block
// exceeds every monomial avoiding it.
class MonomialOrder {
  public:
    enum class Kind { lex, grevlex, product };

    static MonomialOrder lex();
    static MonomialOrder grevlex();
    static MonomialOrder product(std::vector<bool> mask, MonomialOrder first, MonomialOrder second);

    Kind kind() const noexcept { return kind_; }
    const std::vector<bool>& mask() const noexcept { return mask_; }
    const MonomialOrder* first() const noexcept { return first_.get(); }
    const MonomialOrder* second() const noexcept { return second_.get(); }

    int compare(const Monomial& a, const Monomial& b) const; // -1, 0, +1
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    // True when the top-level block contains exactly the given variables, so
    // the order eliminates them.
    bool eliminates(const std::vector<bool>& vars) const;

    std::string describe() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&);

  private:
    MonomialOrder(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<bool> mask_;
    std::shared_ptr<const MonomialOrder> first_, second_;
};

// Mask of the universe variables selected by a predicate.
std::vector<bool> mask_of(const VarUniverse& u, const std::function<bool(const Var&)>& pred);

// Difference of two monomials with the greater one in front; the implicit
// coefficients are +1 and -1.  Equal sides give the zero polynomial, hence
// normalize returns nothing for them.
struct Binomial {
    Monomial lead;
    Monomial trail;

    friend bool operator==(const Binomial& a, const Binomial& b) {
        return a.lead == b.lead && a.trail == b.trail;
    }
};

std::optional<Binomial> normalize(const Monomial& l, const Monomial& r, const MonomialOrder& o);

int degree(const Binomial& b); // max of the two total degrees

std::string to_string(const Binomial& b);

std::uint64_t fingerprint(const Binomial& b);

} // namespace ferrers3d

#endif
