#ifndef Z2SYS_METRIC_HPP
#define Z2SYS_METRIC_HPP

#include <limits>
#include <utility>
#include <vector>

#include "z2sys/complex.hpp"

namespace z2sys {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Edge-count distances from a center vertex, measured in the 1-skeleton.
struct DistanceField {
    Vertex center = 0;
    std::vector<int> dist;  // kUnreachable on other components

    int operator[](Vertex v) const { return dist[static_cast<std::size_t>(v)]; }
    int eccentricity() const;  // max finite distance
};

DistanceField distances(const SimplicialComplex& M, Vertex x);

// max eccentricity over vertices (of the largest component reachable ones)
int diameter(const SimplicialComplex& M);

/**
 * Combinatorial ball and sphere around a vertex.
 *
 * For r >= 1 an inclusion-maximal simplex lies in B(x,r) iff all its vertices
 * are at distance <= r from x and at least one is at distance < r; the ball
 * is the face closure of those.  The sphere S(x,r) consists of the simplices
 * of the ball all of whose vertices are at distance exactly r.  For r = 0
 * both are the single vertex {x}.
 */
struct BallSphere {
    Vertex center = 0;
    int radius = 0;
    SubComplex ball;
    SubComplex sphere;
    DistanceField field;

    long long ball_volume() const { return ball.count(ball.parent().top_dim()); }
    long long sphere_area() const { return sphere.count(ball.parent().top_dim() - 1); }
};

BallSphere ball(const SimplicialComplex& M, Vertex x, int r);

// Cheap variant reusing a precomputed distance field.
BallSphere ball(const SimplicialComplex& M, const DistanceField& df, int r);

/**
 * Sphere separation check: if `path` (an edge path in the 1-skeleton) starts
 * at distance < r and ends at distance > r from x, it must visit a vertex of
 * S(x,r).  Returns true when that holds (vacuously true otherwise).
 */
bool check_separation(const SimplicialComplex& M, Vertex x, int r,
                      const std::vector<Vertex>& path);

// Level-set inequality Vol B(x,r) >= sum_{i<=r} Area S(x,i), together with
// the injective witness assignment sphere-facet -> incident ball top simplex.
struct CoareaResult {
    long long ball_volume = 0;
    long long sphere_area_sum = 0;
    bool ok = false;
    // ((sphere radius, (n-1)-simplex index), assigned n-simplex index)
    std::vector<std::pair<std::pair<int, int>, int>> witness;
    bool witness_injective = false;
};

CoareaResult coarea_check(const SimplicialComplex& M, Vertex x, int r);

enum class VitaliOrder { LargestFirst, NonDecreasing };

/**
 * Greedy disjoint subfamily selection: returns ball indices such that the
 * selected B(x_i, rho_i) share no top simplex pairwise while the doubled
 * balls B(x_i, 2 rho_i) jointly cover every simplex of the target H.  Both
 * properties are re-verified after selection; on failure the result carries
 * a witness instead of crashing.
 */
struct VitaliResult {
    bool ok = false;
    std::vector<int> selected;
    std::string failure;   // empty when ok
    int witness_dim = -1;  // uncovered simplex (dim, index), if coverage failed
    int witness_index = -1;
};

VitaliResult vitali_subcover(const SimplicialComplex& M, const SubComplex& target,
                             const std::vector<std::pair<Vertex, int>>& balls,
                             VitaliOrder order = VitaliOrder::LargestFirst);

// Closed edge loop through x plus its mod-2 edge chain.
struct Loop {
    std::vector<Vertex> vertices;  // closed: front() == back()
    Chain chain;

    std::size_t edge_length() const { return vertices.size() - 1; }
};

/**
 * Splits a 1-cycle supported in B(x,r) into closed loops of edge length at
 * most 2r+1 whose mod-2 sum is the input.  Each loop pairs one cycle edge
 * with the BFS-tree shortest paths from its endpoints to the center.
 */
std::vector<Loop> factor_cycle(const SimplicialComplex& M, Vertex x, int r,
                               const Chain& ell);

} // namespace z2sys

#endif
