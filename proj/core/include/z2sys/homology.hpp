#ifndef Z2SYS_HOMOLOGY_HPP
#define Z2SYS_HOMOLOGY_HPP

#include <memory>
#include <optional>
#include <vector>

#include "z2sys/complex.hpp"
#include "z2sys/subdivision.hpp"

namespace z2sys {

struct HomologyClass {
    int k = 0;
    BitVector coords;  // coordinates in the basis of the owning HomologyPair
    Chain representative;

    bool is_trivial() const { return coords.none(); }
};

struct CohomologyClass {
    int k = 0;
    BitVector coords;
    Cochain representative;

    bool is_trivial() const { return coords.none(); }
};

/**
 * H_k and H^k of a fixed complex, with bases normalized to be dual to each
 * other: <cocycle_reps[i], cycle_reps[j]> = delta_ij.  Class coordinates of
 * a cycle are then plain pairings against the cocycle basis, and vice versa,
 * which makes coordinates manifestly representative-independent.
 */
class HomologyPair {
public:
    HomologyPair(const SimplicialComplex& M, int k);

    const SimplicialComplex& complex() const { return *M_; }
    int k() const { return k_; }
    int dim() const { return static_cast<int>(cycle_reps_.size()); }

    const std::vector<Chain>& cycle_reps() const { return cycle_reps_; }
    const std::vector<Cochain>& cocycle_reps() const { return cocycle_reps_; }

    // basis of the cycle space Z_k (rows)
    const std::vector<BitVector>& cycle_space() const { return cycle_space_; }
    // basis of the boundary space B_k (rows); dim B_k = rank d_{k+1}
    const std::vector<BitVector>& boundary_space() const { return boundary_space_; }
    // basis of the cocycle space Z^k
    const std::vector<BitVector>& cocycle_space() const { return cocycle_space_; }
    // basis of the coboundary space B^k
    const std::vector<BitVector>& coboundary_space() const { return coboundary_space_; }

    BitVector chain_coordinates(const Chain& z) const;      // z must be a cycle
    BitVector cochain_coordinates(const Cochain& w) const;  // w must be a cocycle

    HomologyClass homology_class(const Chain& z) const;
    CohomologyClass cohomology_class(const Cochain& w) const;

    // class with the given coordinates, represented by the matching sum of
    // basis representatives
    HomologyClass class_from_coords(const BitVector& coords) const;
    CohomologyClass coclass_from_coords(const BitVector& coords) const;

    HomologyClass zero_class() const;
    CohomologyClass zero_coclass() const;

private:
    const SimplicialComplex* M_;
    int k_;
    std::vector<Chain> cycle_reps_;
    std::vector<Cochain> cocycle_reps_;
    std::vector<BitVector> cycle_space_, boundary_space_;
    std::vector<BitVector> cocycle_space_, coboundary_space_;
};

std::vector<HomologyClass> homology_basis(const HomologyPair& hp);
std::vector<CohomologyClass> cohomology_basis(const HomologyPair& hp);

inline int betti(const SimplicialComplex& M, int k) { return HomologyPair(M, k).dim(); }

// <alpha, z> at class level; well-defined because both sides are closed
bool evaluate(const CohomologyClass& alpha, const HomologyClass& z);
bool evaluate(const CohomologyClass& alpha, const Chain& cycle);

/**
 * Simplicial cup product of cochain representatives: on an ordered
 * (k1+k2)-simplex the value is the product of alpha on the front (k1+1)
 * vertices and beta on the back (k2+1) vertices, using the complex's global
 * vertex order.
 */
Cochain cup_product(const SimplicialComplex& M, const Cochain& a, const Cochain& b);

// class-level cup product; needs the target HomologyPair(M, k1+k2) to wrap
// the result
CohomologyClass cup_product(const SimplicialComplex& M, const CohomologyClass& a,
                            const CohomologyClass& b, const HomologyPair& target);

// Sum of all top simplices; requires a closed pseudomanifold, verified to be
// a nontrivial cycle.
HomologyClass fundamental_class(const SimplicialComplex& M, const HomologyPair& top_pair);

/**
 * Cup-product duality between H^k and H_{n-k} against the fundamental class:
 * dual(alpha) is the unique class a with <beta, a> = <alpha ~ beta, [M]> for
 * every beta.  The pairing can degenerate away from manifolds; that is
 * detected and reported rather than hidden.
 */
class DualityMap {
public:
    DualityMap(const SimplicialComplex& M, int k);

    bool nondegenerate() const { return nondegenerate_; }
    int k() const { return k_; }

    const HomologyPair& front_pair() const { return *hk_; }   // (M, k)
    const HomologyPair& back_pair() const { return *hnk_; }   // (M, n-k)

    // requires nondegenerate()
    HomologyClass dual(const CohomologyClass& alpha) const;
    // inverse direction: the alpha whose dual is the given class
    CohomologyClass dual_inverse(const HomologyClass& a) const;

private:
    const SimplicialComplex* M_;
    int k_;
    bool nondegenerate_ = false;
    std::shared_ptr<HomologyPair> hk_, hnk_, htop_;
    HomologyClass fundamental_;
    BinaryMatrix pairing_;  // rows: H^k basis, cols: H_{n-k} coords of duals
};

/**
 * Complement-vanishing test driver.  The open complement |M| - |H| is
 * modeled by the full subcomplex K of the barycentric subdivision spanned by
 * barycenters of simplices outside H (a deformation retract of the true
 * complement); alpha is pulled back along the last-vertex map and vanishes
 * on the complement iff the restriction to K is a coboundary of K.
 *
 * The tester precomputes the subdivision and the pullback once so the cut
 * search can probe many candidate subcomplexes cheaply.
 */
class ComplementTester {
public:
    ComplementTester(const SimplicialComplex& M, const Cochain& alpha);

    const Subdivision& subdivision() const { return sd_; }

    // alpha restricted to the complement of H is a coboundary?
    bool vanishes_outside(const SubComplex& H) const;

    // variant for the cut search: H = closure(top simplices `indices` in
    // dimension `top_dim`) together with the whole (top_dim-1)-skeleton
    bool vanishes_outside_augmented(int top_dim, const std::vector<int>& indices) const;

private:
    bool run(const std::vector<char>& vertex_excluded) const;
    bool run_parity_bfs(const std::vector<char>& vertex_excluded) const;

    const SimplicialComplex* M_;
    int k_;
    Subdivision sd_;
    Cochain pulled_;
    // scratch for the k=1 fast path
    std::vector<std::vector<std::pair<Vertex, char>>> parity_adj_;
    mutable std::vector<int> stamp_;
    mutable std::vector<char> pot_;
    mutable std::vector<int> queue_;
    mutable int epoch_ = 0;
};

/**
 * True iff alpha dies on the complement of H in the barycentric model.
 * H must be a subcomplex (face-closed membership set) of M.
 */
bool restricts_to_zero_on_complement(const SimplicialComplex& M, const SubComplex& H,
                                     const CohomologyClass& alpha);

// Restriction of a cochain of M to a standalone copy of the subcomplex H;
// returns the cochain on H.as_complex(declared_dim) together with that
// complex.  Used for Lusternik-Schnirelmann style checks.
struct RestrictedCochain {
    SimplicialComplex complex;
    Cochain cochain;
};
RestrictedCochain restrict_to_subcomplex(const SimplicialComplex& M, const SubComplex& H,
                                         const Cochain& w);

} // namespace z2sys

#endif
