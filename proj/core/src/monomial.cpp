#include "ferrers3d/monomial.hpp"

#include <algorithm>

#include "ferrers3d/error.hpp"

namespace ferrers3d {

std::string to_string(const Var& v) {
    switch (v.kind) {
    case Var::Kind::x: return "x" + std::to_string(v.index);
    case Var::Kind::y: return "y" + std::to_string(v.index);
    case Var::Kind::z: return "z" + std::to_string(v.index);
    case Var::Kind::t: return "t";
    default:
        return "T[" + std::to_string(v.point.i) + "," + std::to_string(v.point.j) + "," +
               std::to_string(v.point.k) + "]";
    }
}

VarUniverse::VarUniverse(std::vector<Var> vars) : vars_(std::move(vars)) {
    for (std::size_t a = 0; a < vars_.size(); ++a)
        for (std::size_t b = a + 1; b < vars_.size(); ++b)
            if (vars_[a] == vars_[b])
                fail(errc::invalid_input, "duplicate variable " + to_string(vars_[a]));
}

int VarUniverse::id_of(const Var& v) const {
    for (std::size_t n = 0; n < vars_.size(); ++n)
        if (vars_[n] == v)
            return static_cast<int>(n);
    return -1;
}

bool operator==(const VarUniverse& a, const VarUniverse& b) { return a.vars_ == b.vars_; }

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    if (a == b)
        return true;
    return a && b && *a == *b;
}

UniversePtr t_universe(const Diagram& d) {
    std::vector<Var> vars;
    vars.reserve(d.size());
    for (const Point& p : d.points())
        vars.push_back(Var{Var::Kind::T, 0, p});
    return std::make_shared<VarUniverse>(std::move(vars));
}

namespace {

void append_ring_vars(std::vector<Var>& vars, const Diagram& d, bool with_t) {
    int m = 0, n = 0, p = 0;
    for (const Point& q : d.points()) {
        m = std::max(m, q.i);
        n = std::max(n, q.j);
        p = std::max(p, q.k);
    }
    for (int c = 1; c <= m; ++c)
        vars.push_back(Var{Var::Kind::x, c, {}});
    for (int c = 1; c <= n; ++c)
        vars.push_back(Var{Var::Kind::y, c, {}});
    for (int c = 1; c <= p; ++c)
        vars.push_back(Var{Var::Kind::z, c, {}});
    if (with_t)
        vars.push_back(Var{Var::Kind::t, 0, {}});
}

} // namespace

UniversePtr ring_universe(const Diagram& d, bool with_t) {
    std::vector<Var> vars;
    append_ring_vars(vars, d, with_t);
    return std::make_shared<VarUniverse>(std::move(vars));
}

UniversePtr joint_universe(const Diagram& d, bool with_t) {
    std::vector<Var> vars;
    append_ring_vars(vars, d, with_t);
    for (const Point& p : d.points())
        vars.push_back(Var{Var::Kind::T, 0, p});
    return std::make_shared<VarUniverse>(std::move(vars));
}

Monomial::Monomial(UniversePtr u, std::vector<std::pair<int, int>> exps)
    : u_(std::move(u)), e_(std::move(exps)) {
    if (!u_)
        fail(errc::invalid_input, "monomial requires a universe");
    std::sort(e_.begin(), e_.end());
    std::erase_if(e_, [](const auto& p) { return p.second == 0; });
    for (std::size_t n = 0; n < e_.size(); ++n) {
        auto [id, exp] = e_[n];
        if (id < 0 || id >= u_->size())
            fail(errc::invalid_input, "variable id out of range");
        if (exp < 0)
            fail(errc::invalid_input, "negative exponent");
        if (n && e_[n - 1].first == id)
            fail(errc::invalid_input, "repeated variable in exponent list");
    }
}

Monomial Monomial::one(UniversePtr u) { return Monomial(std::move(u), {}); }

Monomial Monomial::var(UniversePtr u, int id, int exp) { return Monomial(std::move(u), {{id, exp}}); }

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [id, exp] : e_)
        d += exp;
    return d;
}

int Monomial::degree_of(int id) const {
    for (const auto& [vid, exp] : e_)
        if (vid == id)
            return exp;
    return 0;
}

bool Monomial::squarefree() const {
    for (const auto& [id, exp] : e_)
        if (exp > 1)
            return false;
    return true;
}

namespace {

void require_same_universe(const Monomial& a, const Monomial& b, const char* op) {
    if (!same_universe(a.universe(), b.universe()))
        fail(errc::invalid_input, std::string(op) + " requires matching universes");
}

} // namespace

Monomial mul(const Monomial& a, const Monomial& b) {
    require_same_universe(a, b, "mul");
    std::vector<std::pair<int, int>> out;
    const auto &ea = a.exponents(), &eb = b.exponents();
    std::size_t x = 0, y = 0;
    while (x < ea.size() || y < eb.size()) {
        if (y == eb.size() || (x < ea.size() && ea[x].first < eb[y].first))
            out.push_back(ea[x++]);
        else if (x == ea.size() || eb[y].first < ea[x].first)
            out.push_back(eb[y++]);
        else {
            out.emplace_back(ea[x].first, ea[x].second + eb[y].second);
            ++x, ++y;
        }
    }
    return Monomial(a.universe(), std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_universe(a, b, "divides");
    const auto &ea = a.exponents(), &eb = b.exponents();
    std::size_t y = 0;
    for (const auto& [id, exp] : ea) {
        while (y < eb.size() && eb[y].first < id)
            ++y;
        if (y == eb.size() || eb[y].first != id || eb[y].second < exp)
            return false;
    }
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    require_same_universe(a, b, "quotient");
    if (!divides(a, b))
        fail(errc::invalid_input, to_string(a) + " does not divide " + to_string(b));
    std::vector<std::pair<int, int>> out;
    const auto& ea = a.exponents();
    std::size_t x = 0;
    for (const auto& [id, exp] : b.exponents()) {
        int sub = 0;
        if (x < ea.size() && ea[x].first == id)
            sub = ea[x++].second;
        if (exp - sub > 0)
            out.emplace_back(id, exp - sub);
    }
    return Monomial(b.universe(), std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_universe(a, b, "lcm");
    std::vector<std::pair<int, int>> out;
    const auto &ea = a.exponents(), &eb = b.exponents();
    std::size_t x = 0, y = 0;
    while (x < ea.size() || y < eb.size()) {
        if (y == eb.size() || (x < ea.size() && ea[x].first < eb[y].first))
            out.push_back(ea[x++]);
        else if (x == ea.size() || eb[y].first < ea[x].first)
            out.push_back(eb[y++]);
        else {
            out.emplace_back(ea[x].first, std::max(ea[x].second, eb[y].second));
            ++x, ++y;
        }
    }
    return Monomial(a.universe(), std::move(out));
}

bool coprime(const Monomial& a, const Monomial& b) {
    require_same_universe(a, b, "coprime");
    const auto &ea = a.exponents(), &eb = b.exponents();
    std::size_t x = 0, y = 0;
    while (x < ea.size() && y < eb.size()) {
        if (ea[x].first < eb[y].first)
            ++x;
        else if (eb[y].first < ea[x].first)
            ++y;
        else
            return false;
    }
    return true;
}

Monomial embed(const Monomial& m, const UniversePtr& target) {
    if (same_universe(m.universe(), target))
        return Monomial(target, m.exponents());
    std::vector<std::pair<int, int>> out;
    for (const auto& [id, exp] : m.exponents()) {
        int tid = target->id_of(m.universe()->var(id));
        if (tid < 0)
            fail(errc::invalid_input,
                 "variable " + m.universe()->name(id) + " is absent from the target universe");
        out.emplace_back(tid, exp);
    }
    return Monomial(target, std::move(out));
}

std::string to_string(const Monomial& m) {
    if (m.is_one())
        return "1";
    std::string s;
    for (const auto& [id, exp] : m.exponents()) {
        if (!s.empty())
            s += "*";
        s += m.universe()->name(id);
        if (exp > 1)
            s += "^" + std::to_string(exp);
    }
    return s;
}

std::uint64_t fingerprint(const Monomial& m) {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& [id, exp] : m.exponents()) {
        h ^= static_cast<std::uint64_t>(id) * 2654435761u + static_cast<std::uint64_t>(exp);
        h *= 1099511628211ull;
    }
    return h;
}

MonomialOrder MonomialOrder::lex() { return MonomialOrder(Kind::lex); }

MonomialOrder MonomialOrder::grevlex() { return MonomialOrder(Kind::grevlex); }

MonomialOrder MonomialOrder::product(std::vector<bool> mask, MonomialOrder first,
                                     MonomialOrder second) {
    MonomialOrder o(Kind::product);
    o.mask_ = std::move(mask);
    o.first_ = std::make_shared<MonomialOrder>(std::move(first));
    o.second_ = std::make_shared<MonomialOrder>(std::move(second));
    return o;
}

namespace {

// Mask-and-polarity selections accumulated on the path from the root of an
// order tree down to a leaf.
struct Sel {
    const std::vector<bool>* mask;
    bool keep;
};

bool visible(int id, const std::vector<Sel>& sels) {
    for (const Sel& s : sels) {
        bool in = static_cast<std::size_t>(id) < s.mask->size() && (*s.mask)[static_cast<std::size_t>(id)];
        if (in != s.keep)
            return false;
    }
    return true;
}

int filtered_degree(const Monomial& m, const std::vector<Sel>& sels) {
    int d = 0;
    for (const auto& [id, exp] : m.exponents())
        if (visible(id, sels))
            d += exp;
    return d;
}

int cmp_lex(const Monomial& a, const Monomial& b, const std::vector<Sel>& sels) {
    const auto &ea = a.exponents(), &eb = b.exponents();
    std::size_t x = 0, y = 0;
    // Walk ids upward; smaller id means higher priority.
    while (x < ea.size() || y < eb.size()) {
        int ia = x < ea.size() ? ea[x].first : -1;
        int ib = y < eb.size() ? eb[y].first : -1;
        if (ia >= 0 && !visible(ia, sels)) {
            ++x;
            continue;
        }
        if (ib >= 0 && !visible(ib, sels)) {
            ++y;
            continue;
        }
        if (ia < 0)
            return -1; // b still has a visible variable
        if (ib < 0)
            return 1;
        if (ia < ib)
            return 1; // a holds the higher-priority variable
        if (ib < ia)
            return -1;
        if (ea[x].second != eb[y].second)
            return ea[x].second > eb[y].second ? 1 : -1;
        ++x, ++y;
    }
    return 0;
}

int cmp_grevlex(const Monomial& a, const Monomial& b, const std::vector<Sel>& sels) {
    int da = filtered_degree(a, sels), db = filtered_degree(b, sels);
    if (da != db)
        return da > db ? 1 : -1;
    const auto &ea = a.exponents(), &eb = b.exponents();
    auto x = ea.rbegin();
    auto y = eb.rbegin();
    // Walk ids downward; at the first difference the smaller exponent wins.
    while (x != ea.rend() || y != eb.rend()) {
        int ia = x != ea.rend() ? x->first : -1;
        int ib = y != eb.rend() ? y->first : -1;
        if (ia >= 0 && !visible(ia, sels)) {
            ++x;
            continue;
        }
        if (ib >= 0 && !visible(ib, sels)) {
            ++y;
            continue;
        }
        if (ia < 0 && ib < 0)
            return 0;
        // A variable present on one side only: that side has the positive
        // exponent on the lowest-priority disagreeing variable, so it loses.
        if (ia < 0)
            return 1;
        if (ib < 0)
            return -1;
        if (ia > ib)
            return -1; // a has an extra low variable
        if (ib > ia)
            return 1;
        if (x->second != y->second)
            return x->second < y->second ? 1 : -1;
        ++x, ++y;
    }
    return 0;
}

int cmp_node(const MonomialOrder& o, const Monomial& a, const Monomial& b, std::vector<Sel>& sels) {
    switch (o.kind()) {
    case MonomialOrder::Kind::lex: return cmp_lex(a, b, sels);
    case MonomialOrder::Kind::grevlex: return cmp_grevlex(a, b, sels);
    default: {
        sels.push_back(Sel{&o.mask(), true});
        int r = cmp_node(*o.first(), a, b, sels);
        sels.pop_back();
        if (r != 0)
            return r;
        sels.push_back(Sel{&o.mask(), false});
        r = cmp_node(*o.second(), a, b, sels);
        sels.pop_back();
        return r;
    }
    }
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    require_same_universe(a, b, "compare");
    std::vector<Sel> sels;
    return cmp_node(*this, a, b, sels);
}

bool MonomialOrder::eliminates(const std::vector<bool>& vars) const {
    if (kind_ != Kind::product)
        return false;
    if (mask_.size() < vars.size()) {
        for (std::size_t n = mask_.size(); n < vars.size(); ++n)
            if (vars[n])
                return false;
    }
    for (std::size_t n = 0; n < mask_.size(); ++n)
        if (mask_[n] != (n < vars.size() && vars[n]))
            return false;
    return true;
}

std::string MonomialOrder::describe() const {
    switch (kind_) {
    case Kind::lex: return "lex";
    case Kind::grevlex: return "grevlex";
    default: {
        std::size_t block = 0;
        for (bool b : mask_)
            block += b;
        return "block(" + std::to_string(block) + ": " + first_->describe() + "; " +
               second_->describe() + ")";
    }
    }
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.kind_ != b.kind_)
        return false;
    if (a.kind_ != MonomialOrder::Kind::product)
        return true;
    return a.mask_ == b.mask_ && *a.first_ == *b.first_ && *a.second_ == *b.second_;
}

std::vector<bool> mask_of(const VarUniverse& u, const std::function<bool(const Var&)>& pred) {
    std::vector<bool> m(static_cast<std::size_t>(u.size()));
    for (int id = 0; id < u.size(); ++id)
        m[static_cast<std::size_t>(id)] = pred(u.var(id));
    return m;
}

std::optional<Binomial> normalize(const Monomial& l, const Monomial& r, const MonomialOrder& o) {
    int c = o.compare(l, r);
    if (c == 0)
        return std::nullopt;
    return c > 0 ? Binomial{l, r} : Binomial{r, l};
}

int degree(const Binomial& b) { return std::max(b.lead.total_degree(), b.trail.total_degree()); }

std::string to_string(const Binomial& b) { return to_string(b.lead) + " - " + to_string(b.trail); }

std::uint64_t fingerprint(const Binomial& b) {
    return fingerprint(b.lead) * 1099511628211ull ^ fingerprint(b.trail);
}

} // namespace ferrers3d
