#include "z2sys/subdivision.hpp"

#include <algorithm>
#include <numeric>

namespace z2sys {

Subdivision barycentric_subdivision(const SimplicialComplex& M) {
    const int n = M.top_dim();

    // barycenter vertex ids by (dim, index); increasing dim keeps flag order
    // recoverable from sorted tuples
    std::vector<std::vector<int>> bary_id(static_cast<std::size_t>(n) + 1);
    int next = 0;
    Subdivision sd;
    for (int d = 0; d <= n; ++d) {
        bary_id[d].resize(M.count(d));
        for (int i = 0; i < M.count(d); ++i) {
            bary_id[d][i] = next++;
            sd.origin.emplace_back(d, i);
            sd.last_vertex.push_back(M.simplex(d, i).last_vertex());
        }
    }

    // maximal flags: for each inclusion-maximal simplex, every vertex
    // permutation yields one chain of prefix faces
    std::vector<std::vector<Vertex>> tops;
    for (int d = 0; d <= n; ++d) {
        for (int i = 0; i < M.count(d); ++i) {
            if (!M.is_maximal(d, i)) continue;
            const auto& verts = M.simplex(d, i).vertices();
            std::vector<int> perm(verts.size());
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<Vertex> flag;
                flag.reserve(verts.size());
                std::vector<Vertex> prefix;
                for (int p : perm) {
                    prefix.push_back(verts[p]);
                    Simplex face{prefix};
                    flag.push_back(bary_id[face.dim()][M.index_of(face)]);
                }
                tops.push_back(std::move(flag));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    sd.complex = SimplicialComplex::build(tops, n);
    return sd;
}

Cochain Subdivision::pullback(const SimplicialComplex& M, const Cochain& w) const {
    const int k = w.k;
    Cochain out(k, static_cast<std::size_t>(complex.count(k)));
    std::vector<Vertex> image;
    for (int i = 0; i < complex.count(k); ++i) {
        const auto& verts = complex.simplex(k, i).vertices();
        image.clear();
        bool degenerate = false;
        for (Vertex b : verts) {
            Vertex v = last_vertex[b];
            if (!image.empty() && v <= image.back()) { degenerate = true; break; }
            image.push_back(v);
        }
        if (degenerate) continue;
        int idx = M.index_of(Simplex{image});
        if (idx >= 0 && w.bits.get(idx)) out.bits.set(i);
    }
    return out;
}

SimplicialComplex subdivide(const SimplicialComplex& M, int t) {
    if (t < 0) throw std::invalid_argument("subdivide: negative iteration count");
    SimplicialComplex out = M;
    for (int i = 0; i < t; ++i) out = barycentric_subdivision(out).complex;
    return out;
}

} // namespace z2sys
