#ifndef Z2SYS_COMPLEX_HPP
#define Z2SYS_COMPLEX_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "z2sys/gf2.hpp"
#include "z2sys/simplex.hpp"

namespace z2sys {

/**
 * Finite abstract simplicial complex with a declared top dimension.
 *
 * The complex is built from a list of intended-maximal simplices; the full
 * face lattice is derived.  Vertex identifiers are densified at build time
 * (order-preserving), and within each dimension simplices are kept in
 * lexicographic order of their vertex tuples.  That per-dimension order is
 * the canonical index space for chains, cochains and boundary matrices, and
 * the dense vertex order is the global order used by the cup product.
 *
 * Purity (every maximal simplex of dimension n) is checked, not assumed:
 * non-pure input builds fine and sets a flag, since cutting subcomplexes are
 * routinely non-pure.  Only the ball/sphere machinery insists on purity.
 */
class SimplicialComplex {
public:
    // `maximal` lists the intended maximal simplices; faces of other listed
    // simplices are dropped silently and reported in the build log.
    static SimplicialComplex build(const std::vector<std::vector<Vertex>>& maximal, int n);

    int top_dim() const { return n_; }
    bool pure() const { return pure_; }
    const std::vector<std::string>& build_log() const { return log_; }

    int vertex_count() const { return count(0); }
    int count(int d) const {
        if (d < 0 || d > n_) return 0;
        return static_cast<int>(by_dim_[static_cast<std::size_t>(d)].size());
    }
    // number of top-dimensional simplices
    long long volume() const { return count(n_); }
    long long total_simplices() const {
        long long t = 0;
        for (int d = 0; d <= n_; ++d) t += count(d);
        return t;
    }

    const Simplex& simplex(int d, int i) const { return by_dim_[d][i]; }
    const std::vector<Simplex>& simplices(int d) const { return by_dim_[d]; }

    // index within dimension, or -1 if the simplex is absent
    int index_of(const Simplex& s) const {
        auto it = index_.find(s);
        return it == index_.end() ? -1 : it->second;
    }
    bool contains(const Simplex& s) const { return index_.find(s) != index_.end(); }

    // indices of the (d+1)-dimensional cofaces of the i-th d-simplex
    const std::vector<int>& cofaces(int d, int i) const { return cofaces_[d][i]; }

    // indices of the (d-1)-dimensional facets of the i-th d-simplex
    std::vector<int> facet_indices(int d, int i) const;

    bool is_maximal(int d, int i) const {
        return d == n_ || cofaces_[d][i].empty();
    }

    // 1-skeleton adjacency, sorted neighbor lists
    const std::vector<std::vector<Vertex>>& adjacency() const { return adj_; }

    std::vector<std::vector<Vertex>> maximal_vertex_lists() const;

private:
    int n_ = 0;
    bool pure_ = true;
    std::vector<std::string> log_;
    std::vector<std::vector<Simplex>> by_dim_;           // [d] -> sorted simplices
    std::unordered_map<Simplex, int, SimplexHash> index_; // simplex -> index in its dim
    std::vector<std::vector<std::vector<int>>> cofaces_; // [d][i] -> (d+1)-coface indices
    std::vector<std::vector<Vertex>> adj_;
};

// Mod-2 simplicial k-chain: a bit per k-simplex in the canonical order.
struct Chain {
    int k = 0;
    BitVector bits;

    Chain() = default;
    Chain(int k_, std::size_t n_simplices) : k(k_), bits(n_simplices) {}
    Chain(int k_, BitVector b) : k(k_), bits(std::move(b)) {}

    std::size_t weight() const { return bits.count(); }
    bool is_zero() const { return bits.none(); }

    Chain& operator^=(const Chain& o) {
        if (k != o.k) throw std::invalid_argument("Chain: dimension mismatch");
        bits ^= o.bits;
        return *this;
    }
    friend Chain operator^(Chain a, const Chain& b) { a ^= b; return a; }
    bool operator==(const Chain& o) const { return k == o.k && bits == o.bits; }
};

// Mod-2 simplicial k-cochain, stored the same way (support = simplices
// evaluating to 1).
struct Cochain {
    int k = 0;
    BitVector bits;

    Cochain() = default;
    Cochain(int k_, std::size_t n_simplices) : k(k_), bits(n_simplices) {}
    Cochain(int k_, BitVector b) : k(k_), bits(std::move(b)) {}

    std::size_t weight() const { return bits.count(); }
    bool is_zero() const { return bits.none(); }

    Cochain& operator^=(const Cochain& o) {
        if (k != o.k) throw std::invalid_argument("Cochain: dimension mismatch");
        bits ^= o.bits;
        return *this;
    }
    friend Cochain operator^(Cochain a, const Cochain& b) { a ^= b; return a; }
    bool operator==(const Cochain& o) const { return k == o.k && bits == o.bits; }
};

// <w, z>: parity of the common support
inline bool pair_eval(const Cochain& w, const Chain& z) {
    if (w.k != z.k) throw std::invalid_argument("pair_eval: dimension mismatch");
    return w.bits.dot(z.bits);
}

// Standard mod-2 boundary operator as a matrix: rows are (k-1)-simplices,
// columns are k-simplices, column sigma = facet set of sigma.
BinaryMatrix boundary_matrix(const SimplicialComplex& M, int k);

Chain boundary(const SimplicialComplex& M, const Chain& z);
Cochain coboundary(const SimplicialComplex& M, const Cochain& w);

bool is_cycle(const SimplicialComplex& M, const Chain& z);
bool is_cocycle(const SimplicialComplex& M, const Cochain& w);

/**
 * True iff M is pure, every (n-1)-simplex has exactly two top-dimensional
 * cofaces, and the dual graph on top simplices is connected.  This is the
 * gate for fundamental-class and duality operations.
 */
bool is_closed_pseudomanifold(const SimplicialComplex& M);

/**
 * Subcomplex of a fixed parent, stored as per-dimension membership over the
 * parent's canonical index spaces.  Not necessarily pure.
 */
class SubComplex {
public:
    SubComplex() = default;
    explicit SubComplex(const SimplicialComplex& parent);

    const SimplicialComplex& parent() const { return *parent_; }

    bool contains(int d, int i) const { return member_[d].get(i); }
    void add(int d, int i) { member_[d].set(i); }
    void remove(int d, int i) { member_[d].set(i, false); }

    // adds every face of every member simplex
    void close();

    bool is_closed() const;
    bool empty() const;

    int count(int d) const {
        if (d < 0 || d >= static_cast<int>(member_.size())) return 0;
        return static_cast<int>(member_[d].count());
    }
    // membership bitset for dimension d
    const BitVector& members(int d) const { return member_[d]; }

    // largest d with a d-simplex present, or -1 if empty
    int dim() const;

    std::vector<Vertex> vertex_list() const;

    // member simplices that are inclusion-maximal within the subcomplex
    std::vector<std::vector<Vertex>> maximal_vertex_lists() const;

    // standalone complex built from the member simplices (vertices are
    // re-densified by the build);  declared_dim < 0 means use dim()
    SimplicialComplex as_complex(int declared_dim = -1) const;

    bool operator==(const SubComplex& o) const { return member_ == o.member_; }

    static SubComplex whole(const SimplicialComplex& parent);
    // full d-skeleton of the parent, closed by construction
    static SubComplex skeleton(const SimplicialComplex& parent, int d);
    // closure of a set of d-simplices given by parent indices
    static SubComplex closure_of(const SimplicialComplex& parent, int d,
                                 const std::vector<int>& indices);

private:
    const SimplicialComplex* parent_ = nullptr;
    std::vector<BitVector> member_;
};

} // namespace z2sys

#endif
