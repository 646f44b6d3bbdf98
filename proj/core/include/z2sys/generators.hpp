#ifndef Z2SYS_GENERATORS_HPP
#define Z2SYS_GENERATORS_HPP

#include <vector>

#include "z2sys/complex.hpp"

namespace z2sys {
namespace gen {

// cycle C_m as a pure 1-complex
SimplicialComplex cycle_graph(int m);

// k x k flat torus, each lattice square split along the (i,j)-(i+1,j+1)
// diagonal; 2k^2 triangles, closed pseudomanifold for k >= 3
SimplicialComplex grid_torus(int k);

// the 6-vertex triangulation of the real projective plane
SimplicialComplex rp2_minimal();

// staircase-triangulated product of C_p with the boundary of the n-simplex
// (so S^1 x S^{n-1}); for n = 2 this is a torus family member
SimplicialComplex s1_x_sphere(int p, int n);

/**
 * Connected sum: removes the lexicographically first top simplex from each
 * summand and glues along the boundary via the order-preserving vertex
 * bijection.  `second_from_first` images of (n-1)-homology basis cycles of
 * each summand are returned so callers can address H_{n-1}(M) as the direct
 * sum of the summands' groups.
 */
struct ConnectedSum {
    SimplicialComplex complex;
    std::vector<Chain> from_first;   // images of H_{n-1}(M1) basis cycles
    std::vector<Chain> from_second;  // images of H_{n-1}(M2) basis cycles
};

ConnectedSum connected_sum(const SimplicialComplex& M1, const SimplicialComplex& M2);

} // namespace gen
} // namespace z2sys

#endif
