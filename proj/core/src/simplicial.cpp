#include "ferrers3d/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <gmpxx.h>

#include "ferrers3d/error.hpp"

namespace ferrers3d {

int VertexSet::count() const {
    int n = 0;
    for (std::uint64_t w : w_)
        n += __builtin_popcountll(w);
    return n;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : w_)
        if (w)
            return false;
    return true;
}

bool VertexSet::subset_of(const VertexSet& o) const {
    for (std::size_t n = 0; n < w_.size(); ++n)
        if (w_[n] & ~(n < o.w_.size() ? o.w_[n] : 0))
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    std::size_t n = std::min(w_.size(), o.w_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (w_[i] & o.w_[i])
            return true;
    return false;
}

VertexSet VertexSet::intersect(const VertexSet& o) const {
    VertexSet out;
    out.w_.resize(std::max(w_.size(), o.w_.size()), 0);
    for (std::size_t n = 0; n < std::min(w_.size(), o.w_.size()); ++n)
        out.w_[n] = w_[n] & o.w_[n];
    return out;
}

VertexSet VertexSet::unite(const VertexSet& o) const {
    VertexSet out;
    out.w_.resize(std::max(w_.size(), o.w_.size()), 0);
    for (std::size_t n = 0; n < w_.size(); ++n)
        out.w_[n] |= w_[n];
    for (std::size_t n = 0; n < o.w_.size(); ++n)
        out.w_[n] |= o.w_[n];
    return out;
}

VertexSet VertexSet::minus(const VertexSet& o) const {
    VertexSet out;
    out.w_.resize(std::max(w_.size(), o.w_.size()), 0);
    for (std::size_t n = 0; n < w_.size(); ++n)
        out.w_[n] = w_[n] & ~(n < o.w_.size() ? o.w_[n] : 0);
    return out;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (std::size_t n = 0; n < w_.size(); ++n) {
        std::uint64_t w = w_[n];
        while (w) {
            int b = __builtin_ctzll(w);
            out.push_back(static_cast<int>(n) * 64 + b);
            w &= w - 1;
        }
    }
    return out;
}

namespace {

// Drop facets contained in other facets, deduplicate, fixed order.
std::vector<VertexSet> maximalize(std::vector<VertexSet> f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    std::vector<VertexSet> out;
    for (std::size_t a = 0; a < f.size(); ++a) {
        bool covered = false;
        for (std::size_t b = 0; b < f.size() && !covered; ++b)
            if (a != b && f[a].subset_of(f[b]))
                covered = true;
        if (!covered)
            out.push_back(f[a]);
    }
    return out;
}

} // namespace

SimplicialComplex::SimplicialComplex(std::shared_ptr<const std::vector<std::string>> labels,
                                     std::vector<VertexSet> facets)
    : labels_(std::move(labels)), facets_(maximalize(std::move(facets))) {
    if (!labels_)
        fail(errc::invalid_input, "complex requires a label list");
    if (facets_.empty())
        fail(errc::invalid_input, "complex requires at least one facet ({∅} is the empty facet)");
}

namespace {

VertexSet facet_from_labels(const std::vector<std::string>& labels,
                            const std::vector<std::string>& names) {
    VertexSet f(static_cast<int>(labels.size()));
    for (const std::string& name : names) {
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end())
            fail(errc::invalid_input, "unknown vertex label " + name);
        f.set(static_cast<int>(it - labels.begin()));
    }
    return f;
}

} // namespace

SimplicialComplex::SimplicialComplex(const std::vector<std::string>& labels,
                                     const std::vector<std::vector<std::string>>& facet_labels)
    : SimplicialComplex(std::make_shared<const std::vector<std::string>>(labels), [&] {
          std::vector<VertexSet> fs;
          fs.reserve(facet_labels.size());
          for (const auto& names : facet_labels)
              fs.push_back(facet_from_labels(labels, names));
          return fs;
      }()) {}

VertexSet SimplicialComplex::vertices() const {
    VertexSet v(label_count());
    for (const VertexSet& f : facets_)
        v = v.unite(f);
    return v;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const VertexSet& f : facets_)
        d = std::max(d, f.count() - 1);
    return d;
}

bool SimplicialComplex::pure() const {
    int d = dim();
    for (const VertexSet& f : facets_)
        if (f.count() - 1 != d)
            return false;
    return true;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_ && *a.labels_ == *b.labels_;
}

namespace {

// Maximal cliques of the complement graph are the maximal independent sets of
// the non-edge graph; deterministic Bron-Kerbosch with pivoting.
void bron_kerbosch(const std::vector<VertexSet>& adj, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    for (int u : p.unite(x).members()) {
        int gain = p.intersect(adj[static_cast<std::size_t>(u)]).count();
        if (gain > best) {
            best = gain;
            pivot = u;
        }
    }
    for (int v : p.minus(adj[static_cast<std::size_t>(pivot)]).members()) {
        VertexSet rv = r;
        rv.set(v);
        bron_kerbosch(adj, rv, p.intersect(adj[static_cast<std::size_t>(v)]),
                      x.intersect(adj[static_cast<std::size_t>(v)]), out);
        p.reset(v);
        x.set(v);
    }
}

} // namespace

SimplicialComplex stanley_reisner(const MonomialIdeal& nonfaces) {
    const UniversePtr& u = nonfaces.universe();
    auto labels = std::make_shared<const std::vector<std::string>>([&] {
        std::vector<std::string> names;
        names.reserve(static_cast<std::size_t>(u->size()));
        for (int id = 0; id < u->size(); ++id)
            names.push_back(u->name(id));
        return names;
    }());
    const int n = u->size();

    bool all_quadratic = true;
    VertexSet alive(n);
    for (int id = 0; id < n; ++id)
        alive.set(id);
    for (const Monomial& g : nonfaces.gens()) {
        if (!g.squarefree())
            fail(errc::invalid_input, "non-squarefree generator " + to_string(g) +
                                          " has no Stanley-Reisner complex");
        if (g.is_one())
            fail(errc::invalid_input, "the unit ideal has no Stanley-Reisner complex");
        if (g.total_degree() == 1)
            alive.reset(g.exponents().front().first);
        else if (g.total_degree() != 2)
            all_quadratic = false;
    }

    if (all_quadratic) {
        // Complement-graph adjacency among surviving vertices.
        std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(n));
        for (int a : alive.members())
            for (int b : alive.members())
                if (a != b)
                    adj[static_cast<std::size_t>(a)].set(b);
        for (const Monomial& g : nonfaces.gens()) {
            if (g.total_degree() != 2)
                continue;
            int a = g.exponents()[0].first;
            int b = g.exponents()[1].first;
            adj[static_cast<std::size_t>(a)].reset(b);
            adj[static_cast<std::size_t>(b)].reset(a);
        }
        std::vector<VertexSet> facets;
        bron_kerbosch(adj, VertexSet(n), alive, VertexSet(n), facets);
        return SimplicialComplex(labels, std::move(facets));
    }

    // General minimal-non-face expansion.
    std::vector<VertexSet> facets{alive};
    for (const Monomial& g : nonfaces.gens()) {
        if (g.total_degree() < 2)
            continue;
        VertexSet nf(n);
        for (const auto& [id, exp] : g.exponents())
            nf.set(id);
        std::vector<VertexSet> next;
        for (const VertexSet& f : facets) {
            if (!nf.subset_of(f)) {
                next.push_back(f);
                continue;
            }
            for (int v : nf.members()) {
                VertexSet g2 = f;
                g2.reset(v);
                next.push_back(g2);
            }
        }
        facets = maximalize(std::move(next));
    }
    return SimplicialComplex(labels, std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& c, int v) {
    if (!c.vertices().test(v))
        fail(errc::precondition, "link of a non-vertex");
    std::vector<VertexSet> fs;
    for (const VertexSet& f : c.facets())
        if (f.test(v)) {
            VertexSet g = f;
            g.reset(v);
            fs.push_back(g);
        }
    return SimplicialComplex(c.shared_labels(), std::move(fs));
}

SimplicialComplex deletion(const SimplicialComplex& c, int v) {
    if (!c.vertices().test(v))
        fail(errc::precondition, "deletion of a non-vertex");
    std::vector<VertexSet> fs;
    for (VertexSet f : c.facets()) {
        f.reset(v);
        fs.push_back(f);
    }
    return SimplicialComplex(c.shared_labels(), std::move(fs));
}

SimplicialComplex restriction(const SimplicialComplex& c, const VertexSet& keep) {
    std::vector<VertexSet> fs;
    for (const VertexSet& f : c.facets())
        fs.push_back(f.intersect(keep));
    return SimplicialComplex(c.shared_labels(), std::move(fs));
}

VertexSet cone_apexes(const SimplicialComplex& c) {
    VertexSet a = c.facets().front();
    for (const VertexSet& f : c.facets())
        a = a.intersect(f);
    return a;
}

std::uint64_t fingerprint(const SimplicialComplex& c) {
    std::uint64_t h = 1469598103934665603ull;
    for (const VertexSet& f : c.facets())
        for (std::uint64_t w : f.words()) {
            h ^= w;
            h *= 1099511628211ull;
        }
    return h;
}

namespace {

std::vector<std::uint64_t> canon_key(const SimplicialComplex& c) {
    std::vector<std::uint64_t> key;
    key.push_back(c.facets().size());
    for (const VertexSet& f : c.facets())
        key.insert(key.end(), f.words().begin(), f.words().end());
    return key;
}

std::string purity_witness(const SimplicialComplex& c) {
    return "not pure: facet sizes range over the complex (fingerprint " +
           std::to_string(fingerprint(c)) + ")";
}

struct VDContext {
    const VDOptions* opt;
    std::size_t nodes = 0;
    std::map<std::vector<std::uint64_t>, VDCertificate> memo;
    std::vector<int> hint_ids;
};

SimplicialComplex strip_apexes(const SimplicialComplex& c, const VertexSet& apexes) {
    std::vector<VertexSet> fs;
    fs.reserve(c.facets().size());
    for (const VertexSet& f : c.facets())
        fs.push_back(f.minus(apexes));
    return SimplicialComplex(c.shared_labels(), std::move(fs));
}

std::vector<int> candidate_order(const SimplicialComplex& c, const VDContext& ctx) {
    VertexSet verts = c.vertices();
    std::vector<int> order;
    for (int id : ctx.hint_ids)
        if (verts.test(id))
            order.push_back(id);
    for (int id : verts.members())
        if (std::find(order.begin(), order.end(), id) == order.end())
            order.push_back(id);
    return order;
}

VDCertificate vd_search(const SimplicialComplex& c, VDContext& ctx) {
    if (++ctx.nodes > ctx.opt->max_nodes)
        fail(errc::resource_limit, "vertex decomposability search exceeded " +
                                       std::to_string(ctx.opt->max_nodes) + " nodes");
    if (!c.pure())
        return VDCertificate{false, {}, purity_witness(c)};
    if (c.is_simplex())
        return VDCertificate{true, {}, ""};

    auto key = canon_key(c);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end())
        return it->second;

    // A cone is decomposable exactly when its base is; shed nothing for it.
    VertexSet apexes = cone_apexes(c);
    if (!apexes.empty()) {
        VDCertificate cert = vd_search(strip_apexes(c, apexes), ctx);
        ctx.memo.emplace(std::move(key), cert);
        return cert;
    }

    const int d = c.dim();
    for (int v : candidate_order(c, ctx)) {
        SimplicialComplex lk = link(c, v);
        SimplicialComplex del = deletion(c, v);
        if (!lk.pure() || !del.pure())
            continue;
        if (del.dim() != d || lk.dim() != d - 1)
            continue;
        VDCertificate lk_cert = vd_search(lk, ctx);
        if (!lk_cert.decomposable)
            continue;
        VDCertificate del_cert = vd_search(del, ctx);
        if (!del_cert.decomposable)
            continue;
        VDCertificate cert{true, {}, ""};
        cert.shedding_sequence.push_back(c.labels()[static_cast<std::size_t>(v)]);
        cert.shedding_sequence.insert(cert.shedding_sequence.end(),
                                      del_cert.shedding_sequence.begin(),
                                      del_cert.shedding_sequence.end());
        ctx.memo.emplace(std::move(key), cert);
        return cert;
    }

    VDCertificate cert{false, {}, "no shedding vertex (fingerprint " +
                                      std::to_string(fingerprint(c)) + ")"};
    ctx.memo.emplace(std::move(key), cert);
    return cert;
}

} // namespace

VDCertificate is_vertex_decomposable(const SimplicialComplex& c, const VDOptions& opt) {
    VDContext ctx;
    ctx.opt = &opt;
    for (const std::string& label : opt.shed_hint) {
        auto it = std::find(c.labels().begin(), c.labels().end(), label);
        if (it != c.labels().end())
            ctx.hint_ids.push_back(static_cast<int>(it - c.labels().begin()));
    }
    return vd_search(c, ctx);
}

bool replay_vd(const SimplicialComplex& c, const VDCertificate& cert, const VDOptions& opt) {
    if (!cert.decomposable)
        return !is_vertex_decomposable(c, opt).decomposable;
    SimplicialComplex cur = c;
    std::size_t idx = 0;
    for (;;) {
        if (!cur.pure())
            return false;
        if (cur.is_simplex())
            return idx == cert.shedding_sequence.size();
        VertexSet apexes = cone_apexes(cur);
        if (!apexes.empty()) {
            cur = strip_apexes(cur, apexes);
            continue;
        }
        if (idx == cert.shedding_sequence.size())
            return false;
        const std::string& name = cert.shedding_sequence[idx++];
        auto it = std::find(cur.labels().begin(), cur.labels().end(), name);
        if (it == cur.labels().end())
            return false;
        int v = static_cast<int>(it - cur.labels().begin());
        if (!cur.vertices().test(v))
            return false;
        SimplicialComplex lk = link(cur, v);
        SimplicialComplex del = deletion(cur, v);
        if (!lk.pure() || !del.pure() || del.dim() != cur.dim() || lk.dim() != cur.dim() - 1)
            return false;
        if (!is_vertex_decomposable(lk, opt).decomposable)
            return false;
        cur = del;
    }
}

namespace {

std::vector<VertexSet> all_faces(const std::vector<VertexSet>& facets, std::size_t guard) {
    std::set<VertexSet> seen;
    std::vector<VertexSet> stack(facets.begin(), facets.end());
    while (!stack.empty()) {
        VertexSet f = stack.back();
        stack.pop_back();
        if (!seen.insert(f).second)
            continue;
        if (seen.size() > guard)
            fail(errc::resource_limit,
                 "face enumeration exceeded " + std::to_string(guard) + " faces");
        for (int v : f.members()) {
            VertexSet g = f;
            g.reset(v);
            if (!seen.count(g))
                stack.push_back(g);
        }
    }
    return {seen.begin(), seen.end()};
}

int connected_components(const SimplicialComplex& c) {
    std::vector<int> verts = c.vertices().members();
    std::map<int, int> root;
    for (int v : verts)
        root[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (root[v] != v)
            v = root[v] = root[root[v]];
        return v;
    };
    for (const VertexSet& f : c.facets()) {
        std::vector<int> m = f.members();
        for (std::size_t n = 1; n < m.size(); ++n)
            root[find(m[0])] = find(m[n]);
    }
    std::set<int> roots;
    for (int v : verts)
        roots.insert(find(v));
    return static_cast<int>(roots.size());
}

// Rank by fraction-free one-step elimination; exact over the integers.
int bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    if (m.empty() || m.front().empty())
        return 0;
    std::size_t rows = m.size(), cols = m.front().size();
    if (rows > cols) { // work on the transpose, the rank is the same
        std::vector<std::vector<mpz_class>> t(cols, std::vector<mpz_class>(rows));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                t[c][r] = m[r][c];
        m = std::move(t);
        std::swap(rows, cols);
    }
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        // A unit pivot keeps the entries small when available.
        for (std::size_t r = piv; r < rows; ++r)
            if (m[r][col] == 1 || m[r][col] == -1) {
                piv = r;
                break;
            }
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c2 = col + 1; c2 < cols; ++c2) {
                m[r][c2] = m[r][c2] * m[rank][col] - m[r][col] * m[rank][c2];
                m[r][c2] /= prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

// Rank of the i-th boundary map of the complex spanned by the given faces.
int boundary_rank(const std::vector<VertexSet>& faces, int i) {
    std::map<VertexSet, int> row_index, col_index;
    for (const VertexSet& f : faces) {
        if (f.count() == i)
            row_index.emplace(f, static_cast<int>(row_index.size()));
        else if (f.count() == i + 1)
            col_index.emplace(f, static_cast<int>(col_index.size()));
    }
    if (row_index.empty() || col_index.empty())
        return 0;
    std::vector<std::vector<mpz_class>> m(row_index.size(),
                                          std::vector<mpz_class>(col_index.size()));
    for (const auto& [face, col] : col_index) {
        std::vector<int> verts = face.members();
        for (std::size_t pos = 0; pos < verts.size(); ++pos) {
            VertexSet sub = face;
            sub.reset(verts[pos]);
            m[static_cast<std::size_t>(row_index.at(sub))][static_cast<std::size_t>(col)] =
                pos % 2 == 0 ? 1 : -1;
        }
    }
    return bareiss_rank(std::move(m));
}

} // namespace

CMReport reisner_cm(const SimplicialComplex& c, std::size_t max_faces) {
    std::vector<VertexSet> faces = all_faces(c.facets(), max_faces);
    for (const VertexSet& face : faces) {
        std::vector<VertexSet> lf;
        for (const VertexSet& g : c.facets())
            if (face.subset_of(g))
                lf.push_back(g.minus(face));
        SimplicialComplex lk(c.shared_labels(), maximalize(std::move(lf)));
        int d = lk.dim();
        if (d <= 0)
            continue;
        if (!cone_apexes(lk).empty())
            continue; // cones have vanishing reduced homology everywhere

        auto face_names = [&] {
            std::string s = "{";
            for (int v : face.members()) {
                if (s.size() > 1)
                    s += ",";
                s += c.labels()[static_cast<std::size_t>(v)];
            }
            return s + "}";
        };
        if (connected_components(lk) != 1)
            return CMReport{false, "link of " + face_names() + " is disconnected"};
        if (d == 1)
            continue;

        std::vector<VertexSet> lfaces = all_faces(lk.facets(), max_faces);
        std::vector<int> count(static_cast<std::size_t>(d) + 1, 0);
        for (const VertexSet& f : lfaces)
            if (f.count() >= 1)
                ++count[static_cast<std::size_t>(f.count()) - 1];
        std::vector<int> rank(static_cast<std::size_t>(d) + 2, 0);
        rank[0] = 1; // augmentation map onto the empty face
        for (int i = 1; i <= d; ++i)
            rank[static_cast<std::size_t>(i)] = boundary_rank(lfaces, i);
        for (int i = 1; i < d; ++i) {
            int betti = count[static_cast<std::size_t>(i)] - rank[static_cast<std::size_t>(i)] -
                        rank[static_cast<std::size_t>(i) + 1];
            if (betti != 0)
                return CMReport{false, "link of " + face_names() + " has reduced homology in degree " +
                                           std::to_string(i)};
        }
    }
    return CMReport{true, ""};
}

std::string to_text(const SimplicialComplex& c) {
    std::vector<std::string> lines;
    for (const VertexSet& f : c.facets()) {
        std::string line;
        for (int v : f.members()) {
            if (!line.empty())
                line += ",";
            line += c.labels()[static_cast<std::size_t>(v)];
        }
        lines.push_back(line);
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& line : lines)
        out += line + "\n";
    return out;
}

} // namespace ferrers3d
