#include "z2sys/minweight.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <random>

namespace z2sys {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    explicit Deadline(long long ms) : end(Clock::now() + std::chrono::milliseconds(ms)) {}
    bool expired() const { return Clock::now() >= end; }
};

struct Best {
    std::optional<BitVector> v;
    long long weight = -1;

    void offer(const BitVector& cand) {
        const long long w = static_cast<long long>(cand.count());
        if (!v || w < weight || (w == weight && BitVector::support_less(cand, *v))) {
            v = cand;
            weight = w;
        }
    }
};

bool accepts(const AffineSearch& s, const BitVector& v) {
    return !s.accept || s.accept(v);
}

// exhaustive Gray-code walk over the whole affine space
std::optional<BitVector> enumerate_all(const AffineSearch& s) {
    Best best;
    BitVector cur = s.offset;
    if (accepts(s, cur)) best.offer(cur);
    const std::size_t m = s.basis.size();
    const std::uint64_t total = std::uint64_t(1) << m;
    for (std::uint64_t g = 1; g < total; ++g) {
        cur ^= s.basis[static_cast<std::size_t>(std::countr_zero(g))];
        if (accepts(s, cur)) best.offer(cur);
    }
    return best.v;
}

struct Systematic {
    std::vector<BitVector> rows;     // fully reduced: rows[i] has 1 at pivot[i], 0 at other pivots
    std::vector<std::size_t> pivot;
    BitVector base;                  // solution with zeros on all pivots
};

Systematic systematize(const AffineSearch& s) {
    Systematic sys;
    for (BitVector b : s.basis) {
        for (std::size_t i = 0; i < sys.rows.size(); ++i)
            if (b.get(sys.pivot[i])) b ^= sys.rows[i];
        if (!b.any()) continue;
        const std::size_t p = b.support().front();
        for (std::size_t i = 0; i < sys.rows.size(); ++i)
            if (sys.rows[i].get(p)) sys.rows[i] ^= b;
        sys.rows.push_back(std::move(b));
        sys.pivot.push_back(p);
    }
    sys.base = s.offset;
    for (std::size_t i = 0; i < sys.rows.size(); ++i)
        if (sys.base.get(sys.pivot[i])) sys.base ^= sys.rows[i];
    return sys;
}

// iterative deepening over the information-set weight; returns (best, certified)
std::optional<std::pair<BitVector, bool>> deepening(const AffineSearch& s,
                                                    const SearchOptions& opts) {
    const Systematic sys = systematize(s);
    const int m = static_cast<int>(sys.rows.size());
    Deadline deadline(opts.budget_ms);

    Best best;
    if (accepts(s, sys.base)) best.offer(sys.base);

    BitVector cur = sys.base;
    std::vector<int> chosen;
    long long nodes = 0;
    bool out_of_budget = false;

    // DFS over index combinations of size w, lexicographic
    std::function<void(int, int)> dfs = [&](int start, int remaining) {
        if (out_of_budget) return;
        if ((++nodes & 0x1fff) == 0 && deadline.expired()) {
            out_of_budget = true;
            return;
        }
        if (remaining == 0) {
            if (accepts(s, cur)) best.offer(cur);
            return;
        }
        for (int i = start; i <= m - remaining; ++i) {
            cur ^= sys.rows[i];
            dfs(i + 1, remaining - 1);
            cur ^= sys.rows[i];
            if (out_of_budget) return;
        }
    };

    const int w_max = std::min(opts.weight_cap, m);
    for (int w = 1; w <= w_max; ++w) {
        if (best.v && best.weight <= w) return std::make_pair(*best.v, true);
        dfs(0, w);
        if (out_of_budget) break;
        if (best.v && best.weight <= w + 1) return std::make_pair(*best.v, true);
    }
    if (!out_of_budget && w_max == m && best.v)  // whole space enumerated
        return std::make_pair(*best.v, true);
    if (best.v) return std::make_pair(*best.v, false);
    return std::nullopt;
}

// randomized information-set descent; never certified
std::optional<BitVector> descent(const AffineSearch& s, const SearchOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    const std::size_t width = s.offset.size();
    Best best;
    if (accepts(s, s.offset)) best.offer(s.offset);
    std::vector<std::size_t> perm(width);
    for (std::size_t i = 0; i < width; ++i) perm[i] = i;

    for (int round = 0; round < opts.descent_rounds; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        // eliminate with a shuffled pivot preference
        std::vector<BitVector> rows;
        std::vector<std::size_t> pivots;
        for (BitVector b : s.basis) {
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (b.get(pivots[i])) b ^= rows[i];
            if (!b.any()) continue;
            std::size_t p = width;
            for (std::size_t cand : perm)
                if (b.get(cand)) { p = cand; break; }
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i].get(p)) rows[i] ^= b;
            rows.push_back(std::move(b));
            pivots.push_back(p);
        }
        BitVector z = s.offset;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (z.get(pivots[i])) z ^= rows[i];
        if (accepts(s, z)) best.offer(z);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            BitVector y = z ^ rows[i];
            if (accepts(s, y)) best.offer(y);
        }
    }
    return best.v;
}

} // namespace

std::optional<std::pair<BitVector, bool>> min_weight_affine(const AffineSearch& space,
                                                            const SearchOptions& opts) {
    if (space.basis.size() <= static_cast<std::size_t>(opts.enum_cap)) {
        auto r = enumerate_all(space);
        if (!r) return std::nullopt;
        return std::make_pair(*r, true);
    }
    auto deep = deepening(space, opts);
    if (deep && deep->second) return deep;
    auto rand_best = descent(space, opts);
    // keep the better of the two uncertified candidates
    Best merged;
    if (deep) merged.offer(deep->first);
    if (rand_best) merged.offer(*rand_best);
    if (!merged.v) return std::nullopt;
    return std::make_pair(*merged.v, false);
}

namespace {

// ------- homology cover machinery (k = 1, exact) -------

struct CoverSearch {
    const SimplicialComplex* M;
    const HomologyPair* hp;
    int h = 0;
    std::vector<std::uint32_t> edge_sig;                 // class signature per edge
    std::vector<std::vector<std::pair<int, int>>> adj;   // vertex -> (neighbor, edge)

    CoverSearch(const SimplicialComplex& Mc, const HomologyPair& pair)
        : M(&Mc), hp(&pair), h(pair.dim()) {
        const int ne = Mc.count(1);
        edge_sig.assign(ne, 0);
        for (int e = 0; e < ne; ++e)
            for (int i = 0; i < h; ++i)
                if (pair.cocycle_reps()[i].bits.get(e)) edge_sig[e] |= (1u << i);
        adj.assign(Mc.vertex_count(), {});
        for (int e = 0; e < ne; ++e) {
            const Simplex& s = Mc.simplex(1, e);
            adj[s.vertex(0)].push_back({s.vertex(1), e});
            adj[s.vertex(1)].push_back({s.vertex(0), e});
        }
    }

    // min closed-walk length per signature class, with the best base vertex
    void loop_table(std::vector<long long>& W, std::vector<int>& base_vertex) const {
        const int nv = M->vertex_count();
        const std::uint32_t fiber = 1u << h;
        const long long inf = std::numeric_limits<long long>::max() / 4;
        W.assign(fiber, inf);
        base_vertex.assign(fiber, -1);
        W[0] = 0;

        std::vector<int> dist(static_cast<std::size_t>(nv) << h);
        std::vector<int> bfs;
        for (int v = 0; v < nv; ++v) {
            std::fill(dist.begin(), dist.end(), -1);
            bfs.clear();
            dist[(static_cast<std::size_t>(v) << h)] = 0;
            bfs.push_back(v << h);
            std::size_t head = 0;
            while (head < bfs.size()) {
                const int node = bfs[head++];
                const int u = node >> h;
                const std::uint32_t sig = node & (fiber - 1);
                for (const auto& [w, e] : adj[u]) {
                    const int nxt = (w << h) | static_cast<int>(sig ^ edge_sig[e]);
                    if (dist[nxt] < 0) {
                        dist[nxt] = dist[node] + 1;
                        bfs.push_back(nxt);
                    }
                }
            }
            for (std::uint32_t c = 1; c < fiber; ++c) {
                const int d = dist[(static_cast<std::size_t>(v) << h) | c];
                if (d >= 0 && d < W[c]) {
                    W[c] = d;
                    base_vertex[c] = v;
                }
            }
        }
    }

    // chain of a minimal closed walk with signature c based at v
    Chain walk_chain(int v, std::uint32_t c) const {
        const std::uint32_t fiber = 1u << h;
        const int nv = M->vertex_count();
        std::vector<int> dist(static_cast<std::size_t>(nv) << h, -1);
        std::vector<int> par_node(static_cast<std::size_t>(nv) << h, -1);
        std::vector<int> par_edge(static_cast<std::size_t>(nv) << h, -1);
        std::vector<int> bfs;
        dist[(static_cast<std::size_t>(v) << h)] = 0;
        bfs.push_back(v << h);
        std::size_t head = 0;
        while (head < bfs.size()) {
            const int node = bfs[head++];
            const int u = node >> h;
            const std::uint32_t sig = node & (fiber - 1);
            for (const auto& [w, e] : adj[u]) {
                const int nxt = (w << h) | static_cast<int>(sig ^ edge_sig[e]);
                if (dist[nxt] < 0) {
                    dist[nxt] = dist[node] + 1;
                    par_node[nxt] = node;
                    par_edge[nxt] = e;
                    bfs.push_back(nxt);
                }
            }
        }
        Chain out(1, static_cast<std::size_t>(M->count(1)));
        int node = (v << h) | static_cast<int>(c);
        if (dist[node] < 0) throw std::logic_error("homology cover: unreachable signature");
        while (node != (v << h)) {
            out.bits.flip(par_edge[node]);
            node = par_node[node];
        }
        return out;
    }
};

std::optional<MinWeightResult> cover_min_in_class(const HomologyPair& hp,
                                                  const HomologyClass& a,
                                                  const SearchOptions& opts,
                                                  bool any_nontrivial) {
    const SimplicialComplex& M = hp.complex();
    const int h = hp.dim();
    if (h < 1 || h > opts.cover_cap) return std::nullopt;
    if ((static_cast<long long>(M.vertex_count()) << h) > opts.node_cap) return std::nullopt;

    CoverSearch cs(M, hp);
    std::vector<long long> W;
    std::vector<int> base_vertex;
    cs.loop_table(W, base_vertex);

    const std::uint32_t fiber = 1u << h;
    const long long inf = std::numeric_limits<long long>::max() / 4;

    // subset combination: F[a] = min over nonzero classes c of F[a^c] + W[c]
    std::vector<long long> F(fiber, inf);
    std::vector<std::uint32_t> step(fiber, 0);
    F[0] = 0;
    for (int pass = 0; pass < h + 1; ++pass) {
        bool changed = false;
        for (std::uint32_t st = 0; st < fiber; ++st) {
            if (F[st] >= inf) continue;
            for (std::uint32_t c = 1; c < fiber; ++c) {
                if (W[c] >= inf) continue;
                if (F[st] + W[c] < F[st ^ c]) {
                    F[st ^ c] = F[st] + W[c];
                    step[st ^ c] = c;
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }

    std::uint32_t target = 0;
    if (any_nontrivial) {
        long long bw = inf;
        for (std::uint32_t c = 1; c < fiber; ++c)
            if (F[c] < bw) { bw = F[c]; target = c; }
        if (target == 0) return std::nullopt;
    } else {
        for (std::size_t i : a.coords.support()) target |= (1u << i);
        if (target == 0) return std::nullopt;
    }
    if (F[target] >= inf) throw std::logic_error("homology cover: class unreachable");

    Chain z(1, static_cast<std::size_t>(M.count(1)));
    std::uint32_t st = target;
    while (st) {
        const std::uint32_t c = step[st];
        z ^= cs.walk_chain(base_vertex[c], c);
        st ^= c;
    }
    MinWeightResult res{z, static_cast<long long>(z.weight()), true, "homology_cover"};
    if (res.weight != F[target])
        throw std::logic_error("homology cover: combined walk dropped below the table minimum");
    return res;
}

void verify_class_result(const HomologyPair& hp, const HomologyClass& a,
                         const MinWeightResult& r) {
    if (!is_cycle(hp.complex(), r.chain))
        throw std::logic_error("min_weight_in_class: result is not a cycle");
    if (hp.chain_coordinates(r.chain) != a.coords)
        throw std::logic_error("min_weight_in_class: result left the class");
    if (static_cast<long long>(r.chain.weight()) != r.weight)
        throw std::logic_error("min_weight_in_class: weight bookkeeping broke");
}

} // namespace

MinWeightResult min_weight_in_class(const HomologyPair& hp, const HomologyClass& a,
                                    const SearchOptions& opts) {
    const SimplicialComplex& M = hp.complex();
    const int k = hp.k();
    if (a.k != k) throw std::invalid_argument("min_weight_in_class: dimension mismatch");

    if (a.coords.none()) {
        MinWeightResult res{Chain(k, static_cast<std::size_t>(M.count(k))), 0, true, "zero_class"};
        return res;
    }

    AffineSearch space;
    space.offset = a.representative.bits;
    space.basis = hp.boundary_space();

    MinWeightResult res;
    if (space.basis.size() <= static_cast<std::size_t>(opts.enum_cap)) {
        auto r = min_weight_affine(space, opts);
        res = {Chain(k, r->first), static_cast<long long>(r->first.count()), r->second,
               "coset_enumeration"};
    } else if (k == 1) {
        auto cov = cover_min_in_class(hp, a, opts, false);
        if (cov) {
            res = *cov;
        } else {
            auto r = min_weight_affine(space, opts);
            res = {Chain(k, r->first), static_cast<long long>(r->first.count()), r->second,
                   "information_set"};
        }
    } else {
        auto r = min_weight_affine(space, opts);
        res = {Chain(k, r->first), static_cast<long long>(r->first.count()), r->second,
               "information_set"};
    }
    verify_class_result(hp, a, res);
    return res;
}

MinWeightResult double_cover_shortest_loop(const SimplicialComplex& M,
                                           const CohomologyClass& alpha,
                                           const SearchOptions&) {
    if (alpha.k != 1) throw std::invalid_argument("double_cover_shortest_loop: need k = 1");
    if (alpha.is_trivial())
        throw std::invalid_argument("double_cover_shortest_loop: trivial class, cover disconnects");

    const int nv = M.vertex_count();
    const int ne = M.count(1);
    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (int e = 0; e < ne; ++e) {
        const Simplex& s = M.simplex(1, e);
        adj[s.vertex(0)].push_back({s.vertex(1), e});
        adj[s.vertex(1)].push_back({s.vertex(0), e});
    }
    const BitVector& lab = alpha.representative.bits;

    int best_v = -1;
    int best_d = std::numeric_limits<int>::max();
    std::vector<int> dist(2 * nv);
    std::vector<int> par_node(2 * nv), par_edge(2 * nv);
    std::vector<int> bfs;

    auto run = [&](int v, bool record) {
        std::fill(dist.begin(), dist.end(), -1);
        bfs.clear();
        dist[2 * v] = 0;
        bfs.push_back(2 * v);
        std::size_t head = 0;
        while (head < bfs.size()) {
            const int node = bfs[head++];
            const int u = node >> 1, s = node & 1;
            for (const auto& [w, e] : adj[u]) {
                const int nxt = (w << 1) | (s ^ (lab.get(e) ? 1 : 0));
                if (dist[nxt] < 0) {
                    dist[nxt] = dist[node] + 1;
                    if (record) {
                        par_node[nxt] = node;
                        par_edge[nxt] = e;
                    }
                    bfs.push_back(nxt);
                }
            }
        }
        return dist[2 * v + 1];
    };

    for (int v = 0; v < nv; ++v) {
        const int d = run(v, false);
        if (d >= 0 && d < best_d) {
            best_d = d;
            best_v = v;
        }
    }
    if (best_v < 0)
        throw std::invalid_argument("double_cover_shortest_loop: no detected loop (trivial class?)");

    run(best_v, true);
    Chain z(1, static_cast<std::size_t>(ne));
    int node = 2 * best_v + 1;
    while (node != 2 * best_v) {
        z.bits.flip(par_edge[node]);
        node = par_node[node];
    }
    MinWeightResult res{z, best_d, true, "double_cover"};
    if (static_cast<long long>(z.weight()) != res.weight)
        throw std::logic_error("double_cover_shortest_loop: projected loop cancelled edges");
    if (!is_cycle(M, z) || !lab.dot(z.bits))
        throw std::logic_error("double_cover_shortest_loop: result not a detected cycle");
    return res;
}

MinWeightResult sys_detected(const SimplicialComplex& M, const HomologyPair& hk,
                             const CohomologyClass& alpha, const SearchOptions& opts) {
    if (alpha.is_trivial()) throw std::invalid_argument("sys_detected: trivial class");
    const int k = hk.k();
    if (alpha.k != k) throw std::invalid_argument("sys_detected: dimension mismatch");

    if (k == 1) return double_cover_shortest_loop(M, alpha, opts);

    // affine space of detected cycles
    const BitVector& a = alpha.representative.bits;
    std::vector<BitVector> zero_part;
    std::optional<BitVector> pivot;
    for (const auto& g : hk.cycle_space()) {
        if (a.dot(g)) {
            if (!pivot) pivot = g;
            else zero_part.push_back(g ^ *pivot);
        } else {
            zero_part.push_back(g);
        }
    }
    if (!pivot) throw std::logic_error("sys_detected: class evaluates zero on all cycles");

    AffineSearch space{*pivot, std::move(zero_part), {}};
    auto r = min_weight_affine(space, opts);
    MinWeightResult res{Chain(k, r->first), static_cast<long long>(r->first.count()), r->second,
                        "detected_affine"};
    if (!is_cycle(M, res.chain) || !a.dot(res.chain.bits))
        throw std::logic_error("sys_detected: result not a detected cycle");
    return res;
}

MinWeightResult min_nontrivial_cycle(const HomologyPair& hk, const SearchOptions& opts) {
    const SimplicialComplex& M = hk.complex();
    const int k = hk.k();
    if (hk.dim() == 0) throw std::domain_error("min_nontrivial_cycle: H_k is trivial");

    if (k == 1) {
        auto cov = cover_min_in_class(hk, hk.zero_class(), opts, true);
        if (cov) {
            MinWeightResult res = *cov;
            if (hk.chain_coordinates(res.chain).none())
                throw std::logic_error("min_nontrivial_cycle: landed in the trivial class");
            return res;
        }
    }

    auto nontrivial = [&hk, k, &M](const BitVector& v) {
        for (const auto& w : hk.cocycle_reps())
            if (w.bits.dot(v)) return true;
        return false;
    };
    AffineSearch space{BitVector(static_cast<std::size_t>(M.count(k))), hk.cycle_space(),
                       nontrivial};
    auto r = min_weight_affine(space, opts);
    if (!r) throw std::logic_error("min_nontrivial_cycle: no candidate found");
    MinWeightResult res{Chain(k, r->first), static_cast<long long>(r->first.count()), r->second,
                        "cycle_space_search"};
    if (!is_cycle(M, res.chain) || hk.chain_coordinates(res.chain).none())
        throw std::logic_error("min_nontrivial_cycle: verification failed");
    return res;
}

MinWeightResult min_nontrivial_cocycle(const HomologyPair& hk, const SearchOptions& opts) {
    const SimplicialComplex& M = hk.complex();
    const int k = hk.k();
    if (hk.dim() == 0) throw std::domain_error("min_nontrivial_cocycle: H^k is trivial");

    auto nontrivial = [&hk](const BitVector& v) {
        for (const auto& z : hk.cycle_reps())
            if (z.bits.dot(v)) return true;
        return false;
    };
    AffineSearch space{BitVector(static_cast<std::size_t>(M.count(k))), hk.cocycle_space(),
                       nontrivial};
    auto r = min_weight_affine(space, opts);
    if (!r) throw std::logic_error("min_nontrivial_cocycle: no candidate found");
    Cochain w(k, r->first);
    if (!is_cocycle(M, w) || hk.cochain_coordinates(w).none())
        throw std::logic_error("min_nontrivial_cocycle: verification failed");
    return MinWeightResult{Chain(k, r->first), static_cast<long long>(r->first.count()),
                           r->second, "cocycle_space_search"};
}

} // namespace z2sys
