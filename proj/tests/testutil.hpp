#ifndef Z2SYS_TESTUTIL_HPP
#define Z2SYS_TESTUTIL_HPP

#include <optional>
#include <random>
#include <vector>

#include "z2sys/complex.hpp"
#include "z2sys/homology.hpp"

namespace z2sys::testutil {

// the classical 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
inline SimplicialComplex csaszar_torus() {
    std::vector<std::vector<Vertex>> tris;
    for (int i = 0; i < 7; ++i) {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return SimplicialComplex::build(tris, 2);
}

// single n-simplex with its faces
inline SimplicialComplex full_simplex(int n) {
    std::vector<Vertex> v;
    for (int i = 0; i <= n; ++i) v.push_back(i);
    return SimplicialComplex::build({v}, n);
}

/**
 * Random pure 2-complex grown by gluing triangles along existing edges.
 * Keeps the cycle space small enough for brute-force enumeration oracles.
 * Returns a complex with nontrivial H_1 or nullopt if this sample failed.
 */
inline std::optional<SimplicialComplex> random_pure_2complex(std::mt19937_64& rng,
                                                             int max_vertices = 12,
                                                             int max_cycle_dim = 18) {
    std::uniform_int_distribution<int> nvd(5, max_vertices);
    const int nv = nvd(rng);
    std::uniform_int_distribution<int> ntd(nv / 2 + 2, nv + 2);
    const int nt = ntd(rng);
    std::uniform_int_distribution<int> vd(0, nv - 1);

    std::vector<std::vector<Vertex>> tris;
    auto add_triangle = [&](int a, int b, int c) {
        if (a == b || b == c || a == c) return false;
        std::vector<Vertex> t{a, b, c};
        std::sort(t.begin(), t.end());
        for (const auto& u : tris)
            if (u == t) return false;
        tris.push_back(t);
        return true;
    };

    add_triangle(vd(rng), vd(rng), vd(rng));
    int guard = 0;
    while (static_cast<int>(tris.size()) < nt && ++guard < 300) {
        if (tris.empty()) {
            add_triangle(vd(rng), vd(rng), vd(rng));
            continue;
        }
        // share an edge of an existing triangle to keep the edge count low
        std::uniform_int_distribution<std::size_t> td(0, tris.size() - 1);
        const auto& t = tris[td(rng)];
        std::uniform_int_distribution<int> ed(0, 2);
        const int drop = ed(rng);
        const int a = t[(drop + 1) % 3], b = t[(drop + 2) % 3];
        add_triangle(a, b, vd(rng));
    }
    if (tris.empty()) return std::nullopt;

    auto M = SimplicialComplex::build(tris, 2);
    HomologyPair h1(M, 1);
    if (h1.dim() < 1) return std::nullopt;
    const int cycle_dim = static_cast<int>(h1.cycle_space().size());
    if (cycle_dim > max_cycle_dim) return std::nullopt;
    return M;
}

// keeps sampling until `count` instances pass the filter
inline std::vector<SimplicialComplex> random_pure_2complexes(std::mt19937_64& rng, int count,
                                                             int max_vertices = 12,
                                                             int max_cycle_dim = 18) {
    std::vector<SimplicialComplex> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count && ++guard < count * 200) {
        auto m = random_pure_2complex(rng, max_vertices, max_cycle_dim);
        if (m) out.push_back(std::move(*m));
    }
    return out;
}

/**
 * Brute-force oracle: minimum weight over the whole cycle space subject to a
 * predicate, by plain enumeration over the nullspace basis.  Deliberately
 * written without the production search machinery.
 */
template <typename Pred>
inline long long brute_min_cycle_weight(const SimplicialComplex& M, int k, Pred&& accept) {
    const BinaryMatrix bd = boundary_matrix(M, k);
    const auto basis = bd.nullspace();
    if (basis.size() > 26) throw std::runtime_error("brute oracle: cycle space too large");
    const std::uint64_t total = std::uint64_t(1) << basis.size();
    long long best = -1;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        BitVector z(static_cast<std::size_t>(M.count(k)));
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((mask >> i) & 1) z ^= basis[i];
        if (!accept(z)) continue;
        const long long w = static_cast<long long>(z.count());
        if (best < 0 || w < best) best = w;
    }
    return best;
}

} // namespace z2sys::testutil

#endif
