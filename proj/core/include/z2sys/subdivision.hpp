#ifndef Z2SYS_SUBDIVISION_HPP
#define Z2SYS_SUBDIVISION_HPP

#include <utility>
#include <vector>

#include "z2sys/complex.hpp"

namespace z2sys {

/**
 * Barycentric subdivision Sd(M).
 *
 * Vertices of Sd(M) are the simplices of M; simplices of Sd(M) are flags
 * (chains of proper faces).  Because vertex ids are assigned by increasing
 * dimension, the sorted vertex tuple of any Sd-simplex recovers its flag
 * order.  `last_vertex` realizes the standard simplicial map Sd(M) -> M
 * sending the barycenter of a face to the face's largest vertex; pulling
 * cochains back along it preserves cohomology classes.
 */
struct Subdivision {
    SimplicialComplex complex;
    // Sd-vertex -> (dimension, index) of the originating simplex of M
    std::vector<std::pair<int, int>> origin;
    // Sd-vertex -> image vertex in M under the last-vertex map
    std::vector<Vertex> last_vertex;

    // pullback of a k-cochain of M to a k-cochain of Sd(M)
    Cochain pullback(const SimplicialComplex& M, const Cochain& w) const;
};

Subdivision barycentric_subdivision(const SimplicialComplex& M);

// t-fold iterated barycentric subdivision
SimplicialComplex subdivide(const SimplicialComplex& M, int t);

} // namespace z2sys

#endif
