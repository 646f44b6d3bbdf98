#include "z2sys/metric.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace z2sys {

int DistanceField::eccentricity() const {
    int m = 0;
    for (int d : dist)
        if (d != kUnreachable) m = std::max(m, d);
    return m;
}

DistanceField distances(const SimplicialComplex& M, Vertex x) {
    const int nv = M.vertex_count();
    if (x < 0 || x >= nv) throw std::invalid_argument("distances: unknown vertex");
    DistanceField f;
    f.center = x;
    f.dist.assign(nv, kUnreachable);
    f.dist[x] = 0;
    std::queue<Vertex> q;
    q.push(x);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex v : M.adjacency()[u]) {
            if (f.dist[v] == kUnreachable) {
                f.dist[v] = f.dist[u] + 1;
                q.push(v);
            }
        }
    }
    return f;
}

int diameter(const SimplicialComplex& M) {
    int d = 0;
    for (Vertex x = 0; x < M.vertex_count(); ++x)
        d = std::max(d, distances(M, x).eccentricity());
    return d;
}

BallSphere ball(const SimplicialComplex& M, const DistanceField& df, int r) {
    if (!M.pure()) throw std::invalid_argument("ball: complex is not pure");
    if (r < 0) throw std::invalid_argument("ball: negative radius");

    BallSphere bs;
    bs.center = df.center;
    bs.radius = r;
    bs.field = df;
    bs.ball = SubComplex(M);
    bs.sphere = SubComplex(M);

    if (r == 0) {
        int xi = M.index_of(Simplex{{df.center}});
        bs.ball.add(0, xi);
        bs.sphere.add(0, xi);
        return bs;
    }

    for (int d = 0; d <= M.top_dim(); ++d) {
        for (int i = 0; i < M.count(d); ++i) {
            if (!M.is_maximal(d, i)) continue;
            const auto& verts = M.simplex(d, i).vertices();
            bool all_le = true, some_lt = false;
            for (Vertex v : verts) {
                const int dv = df.dist[v];
                if (dv == kUnreachable || dv > r) { all_le = false; break; }
                if (dv < r) some_lt = true;
            }
            if (all_le && some_lt) bs.ball.add(d, i);
        }
    }
    bs.ball.close();

    for (int d = 0; d <= M.top_dim(); ++d) {
        for (std::size_t i : bs.ball.members(d).support()) {
            const auto& verts = M.simplex(d, static_cast<int>(i)).vertices();
            bool all_exact = true;
            for (Vertex v : verts)
                if (df.dist[v] != r) { all_exact = false; break; }
            if (all_exact) bs.sphere.add(d, static_cast<int>(i));
        }
    }
    return bs;
}

BallSphere ball(const SimplicialComplex& M, Vertex x, int r) {
    return ball(M, distances(M, x), r);
}

bool check_separation(const SimplicialComplex& M, Vertex x, int r,
                      const std::vector<Vertex>& path) {
    if (path.empty()) throw std::invalid_argument("check_separation: empty path");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (M.index_of(Simplex{{path[i], path[i + 1]}}) < 0)
            throw std::invalid_argument("check_separation: not an edge path");
    }
    const auto df = distances(M, x);
    auto d = [&](Vertex v) { return df.dist[v]; };
    if (!(d(path.front()) < r && d(path.back()) > r)) return true;

    const auto bs = ball(M, df, r);
    for (Vertex v : path) {
        int vi = M.index_of(Simplex{{v}});
        if (bs.sphere.contains(0, vi)) return true;
    }
    return false;
}

CoareaResult coarea_check(const SimplicialComplex& M, Vertex x, int r) {
    if (!M.pure()) throw std::invalid_argument("coarea_check: complex is not pure");
    const int n = M.top_dim();
    const auto df = distances(M, x);

    CoareaResult res;
    const auto outer = ball(M, df, r);
    res.ball_volume = outer.ball_volume();

    std::vector<char> used(M.count(n), 0);
    res.witness_injective = true;
    for (int i = 1; i <= r; ++i) {
        const auto bs = ball(M, df, i);
        res.sphere_area_sum += bs.sphere_area();
        if (n == 0) continue;
        for (std::size_t t : bs.sphere.members(n - 1).support()) {
            // a sphere facet extends to a ball top simplex whose extra vertex
            // is strictly inside; pick the lowest-index one
            int assigned = -1;
            for (int c : M.cofaces(n - 1, static_cast<int>(t))) {
                if (!bs.ball.contains(n, c)) continue;
                assigned = c;
                break;
            }
            if (assigned >= 0) {
                if (used[assigned]) res.witness_injective = false;
                used[assigned] = 1;
                res.witness.push_back({{i, static_cast<int>(t)}, assigned});
            } else {
                res.witness_injective = false;
            }
        }
    }
    res.ok = res.ball_volume >= res.sphere_area_sum;
    return res;
}

VitaliResult vitali_subcover(const SimplicialComplex& M, const SubComplex& target,
                             const std::vector<std::pair<Vertex, int>>& balls,
                             VitaliOrder order) {
    const int n = M.top_dim();
    VitaliResult res;

    for (const auto& [x, rho] : balls) {
        if (rho < 1) throw std::invalid_argument("vitali_subcover: radius below 1");
        if (x < 0 || x >= M.vertex_count())
            throw std::invalid_argument("vitali_subcover: unknown center");
    }

    std::vector<int> idx(balls.size());
    for (std::size_t i = 0; i < balls.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (order == VitaliOrder::LargestFirst) return balls[a].second > balls[b].second;
        return balls[a].second < balls[b].second;
    });

    // greedy: admit a ball iff its top simplices avoid all admitted ones
    BitVector occupied(static_cast<std::size_t>(M.count(n)));
    std::vector<BitVector> small_tops;
    for (int i : idx) {
        const auto bs = ball(M, balls[i].first, balls[i].second);
        const BitVector& tops = bs.ball.members(n);
        bool clash = false;
        for (std::size_t w = 0; w < tops.words().size(); ++w)
            if (tops.words()[w] & occupied.words()[w]) { clash = true; break; }
        if (!clash) {
            occupied ^= tops;
            res.selected.push_back(i);
            small_tops.push_back(tops);
        }
    }
    std::sort(res.selected.begin(), res.selected.end());

    // re-verify disjointness pairwise
    for (std::size_t a = 0; a < small_tops.size(); ++a) {
        for (std::size_t b = a + 1; b < small_tops.size(); ++b) {
            bool overlap = false;
            for (std::size_t w = 0; w < small_tops[a].words().size(); ++w)
                if (small_tops[a].words()[w] & small_tops[b].words()[w]) { overlap = true; break; }
            if (overlap) {
                res.ok = false;
                res.failure = "selected balls share a top simplex";
                return res;
            }
        }
    }

    // re-verify coverage of the target by the doubled balls
    SubComplex covered(M);
    for (int i : res.selected) {
        const auto doubled = ball(M, balls[i].first, 2 * balls[i].second);
        for (int d = 0; d <= n; ++d)
            for (std::size_t s : doubled.ball.members(d).support())
                covered.add(d, static_cast<int>(s));
    }
    for (int d = 0; d <= n; ++d) {
        for (std::size_t s : target.members(d).support()) {
            if (!covered.contains(d, static_cast<int>(s))) {
                res.ok = false;
                res.failure = "doubled balls do not cover the target";
                res.witness_dim = d;
                res.witness_index = static_cast<int>(s);
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

std::vector<Loop> factor_cycle(const SimplicialComplex& M, Vertex x, int r,
                               const Chain& ell) {
    if (ell.k != 1) throw std::invalid_argument("factor_cycle: chain dimension must be 1");
    if (!is_cycle(M, ell)) throw std::invalid_argument("factor_cycle: input is not a cycle");
    const auto df = distances(M, x);
    const auto bs = ball(M, df, r);
    for (std::size_t e : ell.bits.support())
        if (!bs.ball.contains(1, static_cast<int>(e)))
            throw std::invalid_argument("factor_cycle: cycle leaves the ball");

    // deterministic BFS tree rooted at x (adjacency lists are sorted)
    const int nv = M.vertex_count();
    std::vector<Vertex> parent(nv, -1);
    {
        std::queue<Vertex> q;
        q.push(x);
        std::vector<char> seen(nv, 0);
        seen[x] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : M.adjacency()[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    parent[v] = u;
                    q.push(v);
                }
            }
        }
    }

    auto tree_path = [&](Vertex v) {  // v .. x along the tree
        std::vector<Vertex> p{v};
        while (p.back() != x) p.push_back(parent[p.back()]);
        return p;
    };

    std::vector<Loop> out;
    for (std::size_t e : ell.bits.support()) {
        const Simplex& edge = M.simplex(1, static_cast<int>(e));
        const Vertex u = edge.vertex(0), v = edge.vertex(1);

        Loop loop;
        auto up = tree_path(u);  // u..x
        std::reverse(up.begin(), up.end());
        loop.vertices = std::move(up);  // x..u
        auto vp = tree_path(v);         // v..x
        loop.vertices.insert(loop.vertices.end(), vp.begin(), vp.end());

        loop.chain = Chain(1, static_cast<std::size_t>(M.count(1)));
        for (std::size_t i = 0; i + 1 < loop.vertices.size(); ++i) {
            int ei = M.index_of(Simplex{{loop.vertices[i], loop.vertices[i + 1]}});
            loop.chain.bits.flip(ei);
        }
        out.push_back(std::move(loop));
    }
    return out;
}

} // namespace z2sys
