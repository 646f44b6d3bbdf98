#include "z2sys/generators.hpp"

#include <stdexcept>
#include <unordered_map>

#include "z2sys/homology.hpp"

namespace z2sys {
namespace gen {

SimplicialComplex cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle_graph: need m >= 3");
    std::vector<std::vector<Vertex>> edges;
    for (int i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
    return SimplicialComplex::build(edges, 1);
}

SimplicialComplex grid_torus(int k) {
    if (k < 3) throw std::invalid_argument("grid_torus: need k >= 3, identifications collide");
    auto id = [k](int i, int j) { return ((i % k + k) % k) * k + ((j % k + k) % k); };
    std::vector<std::vector<Vertex>> tris;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            tris.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
        }
    }
    return SimplicialComplex::build(tris, 2);
}

SimplicialComplex rp2_minimal() {
    // pentagon 0..4 with pentagram diagonals, apex 5
    std::vector<std::vector<Vertex>> tris = {
        {0, 1, 3}, {1, 2, 4}, {2, 3, 0}, {3, 4, 1}, {4, 0, 2},
        {0, 1, 5}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {4, 0, 5},
    };
    return SimplicialComplex::build(tris, 2);
}

SimplicialComplex s1_x_sphere(int p, int n) {
    if (p < 3) throw std::invalid_argument("s1_x_sphere: need p >= 3");
    if (n < 2 || n > 3) throw std::invalid_argument("s1_x_sphere: n must be 2 or 3");

    // vertices of the product are pairs (circle vertex a, sphere vertex b)
    auto id = [n](int a, int b) { return a * (n + 1) + b; };

    // facets of the boundary of the n-simplex on vertices 0..n
    std::vector<std::vector<int>> sphere_facets;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> f;
        for (int b = 0; b <= n; ++b)
            if (b != skip) f.push_back(b);
        sphere_facets.push_back(f);
    }

    std::vector<std::vector<Vertex>> tops;
    for (int a = 0; a < p; ++a) {
        // circle edge {a, a+1 mod p}, ordered by the global vertex order
        int u0 = a, u1 = (a + 1) % p;
        if (u0 > u1) std::swap(u0, u1);
        for (const auto& f : sphere_facets) {
            // staircase paths through the 2 x n grid: one vertical step at j
            const int m = static_cast<int>(f.size());  // = n
            for (int j = 0; j < m; ++j) {
                std::vector<Vertex> cell;
                for (int t = 0; t <= j; ++t) cell.push_back(id(u0, f[t]));
                for (int t = j; t < m; ++t) cell.push_back(id(u1, f[t]));
                tops.push_back(cell);
            }
        }
    }
    return SimplicialComplex::build(tops, n);
}

ConnectedSum connected_sum(const SimplicialComplex& M1, const SimplicialComplex& M2) {
    const int n = M1.top_dim();
    if (n != M2.top_dim()) throw std::invalid_argument("connected_sum: dimension mismatch");
    if (!is_closed_pseudomanifold(M1) || !is_closed_pseudomanifold(M2))
        throw std::invalid_argument("connected_sum: summands must be closed pseudomanifolds");

    const Simplex& drop1 = M1.simplex(n, 0);
    const Simplex& drop2 = M2.simplex(n, 0);

    // glue the boundary of drop2 onto the boundary of drop1 order-preservingly;
    // remaining M2 vertices go above M1's range
    std::unordered_map<Vertex, Vertex> relabel;
    for (int t = 0; t <= n; ++t) relabel[drop2.vertex(t)] = drop1.vertex(t);
    Vertex next = M1.vertex_count();
    for (int v = 0; v < M2.vertex_count(); ++v)
        if (!relabel.count(v)) relabel[v] = next++;

    std::vector<std::vector<Vertex>> tops;
    for (int i = 0; i < M1.count(n); ++i) {
        if (i == 0) continue;
        tops.push_back(M1.simplex(n, i).vertices());
    }
    for (int i = 0; i < M2.count(n); ++i) {
        if (i == 0) continue;
        std::vector<Vertex> w;
        for (Vertex v : M2.simplex(n, i).vertices()) w.push_back(relabel.at(v));
        tops.push_back(w);
    }

    ConnectedSum out{SimplicialComplex::build(tops, n), {}, {}};

    // push the summands' (n-1)-homology bases into the sum
    auto push = [&](const SimplicialComplex& Mi, bool relabeled, std::vector<Chain>& dst) {
        HomologyPair hp(Mi, n - 1);
        for (const auto& rep : hp.cycle_reps()) {
            Chain img(n - 1, static_cast<std::size_t>(out.complex.count(n - 1)));
            for (std::size_t s : rep.bits.support()) {
                std::vector<Vertex> w;
                for (Vertex v : Mi.simplex(n - 1, static_cast<int>(s)).vertices())
                    w.push_back(relabeled ? relabel.at(v) : v);
                int idx = out.complex.index_of(Simplex{w});
                if (idx < 0) throw std::logic_error("connected_sum: lost face");
                img.bits.flip(idx);
            }
            dst.push_back(std::move(img));
        }
    };
    push(M1, false, out.from_first);
    push(M2, true, out.from_second);
    return out;
}

} // namespace gen
} // namespace z2sys
