#ifndef FERRERS3D_SIMPLICIAL_HPP
#define FERRERS3D_SIMPLICIAL_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ferrers3d/groebner.hpp"

namespace ferrers3d {

// Subset of a fixed vertex range, packed into 64-bit words.
class VertexSet {
    std::vector<std::uint64_t> w_;

  public:
    explicit VertexSet(int capacity = 0) : w_((static_cast<std::size_t>(capacity) + 63) / 64, 0) {}

    void set(int i) { w_[static_cast<std::size_t>(i) / 64] |= 1ull << (i % 64); }
    void reset(int i) { w_[static_cast<std::size_t>(i) / 64] &= ~(1ull << (i % 64)); }
    bool test(int i) const {
        std::size_t word = static_cast<std::size_t>(i) / 64;
        return word < w_.size() && (w_[word] >> (i % 64) & 1);
    }
    int count() const;
    bool empty() const;
    bool subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;
    VertexSet intersect(const VertexSet& o) const;
    VertexSet unite(const VertexSet& o) const;
    VertexSet minus(const VertexSet& o) const;
    std::vector<int> members() const;
    const std::vector<std::uint64_t>& words() const noexcept { return w_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.w_ <=> b.w_; }
};

// Simplicial complex given by its facets (an antichain under inclusion) over
// a shared list of vertex labels.  The complex {∅} is stored as the single
// empty facet; an empty facet list is rejected.  Every vertex of the label
// range that occurs in some facet is a vertex of the complex.
class SimplicialComplex {
    std::shared_ptr<const std::vector<std::string>> labels_;
    std::vector<VertexSet> facets_;

  public:
    SimplicialComplex(std::shared_ptr<const std::vector<std::string>> labels,
                      std::vector<VertexSet> facets);
    SimplicialComplex(const std::vector<std::string>& labels,
                      const std::vector<std::vector<std::string>>& facet_labels);

    const std::vector<std::string>& labels() const noexcept { return *labels_; }
    const std::shared_ptr<const std::vector<std::string>>& shared_labels() const noexcept {
        return labels_;
    }
    const std::vector<VertexSet>& facets() const noexcept { return facets_; }
    int label_count() const noexcept { return static_cast<int>(labels_->size()); }

    VertexSet vertices() const; // union of the facets
    int dim() const;            // -1 for {∅}
    bool pure() const;
    bool is_simplex() const { return facets_.size() == 1; }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&);
};

// Complex of the squarefree monomial ideal: faces are the sets supporting no
// generator.  Quadratic generators are handled as a non-edge graph whose
// maximal independent sets are the facets; other squarefree generators go
// through the general minimal-non-face expansion.  Generators with exponents
// above one are rejected.
SimplicialComplex stanley_reisner(const MonomialIdeal& nonfaces);

SimplicialComplex link(const SimplicialComplex& c, int v);
SimplicialComplex deletion(const SimplicialComplex& c, int v);
SimplicialComplex restriction(const SimplicialComplex& c, const VertexSet& keep);
VertexSet cone_apexes(const SimplicialComplex& c); // vertices lying in every facet

// 64-bit digest of the facet list, used as the failure witness and as the
// memoization key basis of the decomposability search.
std::uint64_t fingerprint(const SimplicialComplex& c);

// Witness for vertex decomposability of a pure complex.  The shedding
// sequence lists the vertices shed from the successive deletions down to a
// simplex (cone apexes are stripped silently; a cone is decomposable exactly
// when its base is).  Links encountered along the chain are certified
// recursively; replay_vd re-verifies the chain conditions and re-certifies
// the links.
struct VDCertificate {
    bool decomposable = false;
    std::vector<std::string> shedding_sequence;
    std::string failure_witness;
};

struct VDOptions {
    std::size_t max_nodes = 2000000;
    std::vector<std::string> shed_hint; // labels to try first at every level
};

VDCertificate is_vertex_decomposable(const SimplicialComplex& c, const VDOptions& opt = {});

bool replay_vd(const SimplicialComplex& c, const VDCertificate& cert, const VDOptions& opt = {});

struct CMReport {
    bool cm = true;
    std::string witness;
};

// Reisner criterion over the rationals: every link, the whole complex
// included, must have vanishing reduced homology below its dimension.  Ranks
// are computed by exact fraction-free integer elimination.  The face
// enumeration is guarded; exceeding the guard raises resource_limit.
CMReport reisner_cm(const SimplicialComplex& c, std::size_t max_faces = 200000);

// One facet per line as comma separated labels, lines sorted.
std::string to_text(const SimplicialComplex& c);

} // namespace ferrers3d

#endif
