#include "z2sys/complex.hpp"

#include <map>
#include <queue>
#include <set>

namespace z2sys {

SimplicialComplex SimplicialComplex::build(const std::vector<std::vector<Vertex>>& maximal, int n) {
    if (maximal.empty()) throw std::invalid_argument("build: empty input");
    if (n < 0) throw std::invalid_argument("build: negative dimension");

    SimplicialComplex M;
    M.n_ = n;

    // densify vertex ids, preserving numeric order
    std::set<Vertex> raw;
    for (const auto& vs : maximal) {
        if (static_cast<int>(vs.size()) > n + 1)
            throw std::invalid_argument("build: simplex exceeds declared dimension");
        for (Vertex v : vs) {
            if (v < 0) throw std::invalid_argument("build: negative vertex id");
            raw.insert(v);
        }
    }
    std::unordered_map<Vertex, Vertex> dense;
    Vertex next = 0;
    for (Vertex v : raw) dense[v] = next++;
    if (next != *raw.rbegin() + 1)
        M.log_.push_back("vertex ids densified");

    std::set<Simplex> input;
    for (const auto& vs : maximal) {
        std::vector<Vertex> w;
        w.reserve(vs.size());
        for (Vertex v : vs) w.push_back(dense.at(v));
        input.insert(Simplex(std::move(w)));
    }

    // drop listed simplices that are faces of other listed simplices
    std::vector<Simplex> tops;
    for (const auto& s : input) {
        bool dominated = false;
        for (const auto& t : input) {
            if (s != t && s.is_face_of(t)) { dominated = true; break; }
        }
        if (dominated)
            M.log_.push_back("dropped listed face of another listed simplex");
        else
            tops.push_back(s);
    }

    // face closure
    std::set<Simplex> faces(tops.begin(), tops.end());
    {
        std::vector<Simplex> frontier(tops.begin(), tops.end());
        while (!frontier.empty()) {
            Simplex s = frontier.back();
            frontier.pop_back();
            if (s.dim() == 0) continue;
            for (int i = 0; i <= s.dim(); ++i) {
                Simplex f = s.facet(i);
                if (faces.insert(f).second) frontier.push_back(f);
            }
        }
    }

    M.by_dim_.assign(static_cast<std::size_t>(n) + 1, {});
    for (const auto& s : faces) {
        if (s.dim() > n) throw std::logic_error("build: face above declared dimension");
        M.by_dim_[s.dim()].push_back(s);
    }
    for (int d = 0; d <= n; ++d) {
        auto& v = M.by_dim_[d];
        std::sort(v.begin(), v.end());
        for (std::size_t i = 0; i < v.size(); ++i)
            M.index_[v[i]] = static_cast<int>(i);
    }

    // purity: every inclusion-maximal simplex has dimension n
    M.pure_ = true;
    for (const auto& s : tops) {
        if (s.dim() != n) { M.pure_ = false; break; }
    }
    if (!M.pure_) M.log_.push_back("non-pure: maximal simplex below declared dimension");
    if (M.count(n) == 0) {
        M.pure_ = false;
        M.log_.push_back("non-pure: no top-dimensional simplex");
    }

    // coface maps
    M.cofaces_.assign(static_cast<std::size_t>(n) + 1, {});
    for (int d = 0; d <= n; ++d)
        M.cofaces_[d].assign(M.by_dim_[d].size(), {});
    for (int d = 1; d <= n; ++d) {
        for (std::size_t i = 0; i < M.by_dim_[d].size(); ++i) {
            const Simplex& s = M.by_dim_[d][i];
            for (int j = 0; j <= s.dim(); ++j) {
                int fi = M.index_of(s.facet(j));
                M.cofaces_[d - 1][fi].push_back(static_cast<int>(i));
            }
        }
    }

    // 1-skeleton
    M.adj_.assign(M.by_dim_[0].size(), {});
    if (n >= 1) {
        for (const auto& e : M.by_dim_[1]) {
            M.adj_[e.vertex(0)].push_back(e.vertex(1));
            M.adj_[e.vertex(1)].push_back(e.vertex(0));
        }
        for (auto& nb : M.adj_) std::sort(nb.begin(), nb.end());
    }

    return M;
}

std::vector<int> SimplicialComplex::facet_indices(int d, int i) const {
    std::vector<int> out;
    if (d == 0) return out;
    const Simplex& s = by_dim_[d][i];
    out.reserve(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) out.push_back(index_of(s.facet(j)));
    return out;
}

std::vector<std::vector<Vertex>> SimplicialComplex::maximal_vertex_lists() const {
    std::vector<std::vector<Vertex>> out;
    for (int d = 0; d <= n_; ++d)
        for (int i = 0; i < count(d); ++i)
            if (is_maximal(d, i)) out.push_back(by_dim_[d][i].vertices());
    return out;
}

BinaryMatrix boundary_matrix(const SimplicialComplex& M, int k) {
    if (k < 1 || k > M.top_dim()) throw std::invalid_argument("boundary_matrix: k out of range");
    BinaryMatrix B(M.count(k - 1), M.count(k));
    for (int j = 0; j < M.count(k); ++j)
        for (int fi : M.facet_indices(k, j)) B.set(fi, j);
    return B;
}

Chain boundary(const SimplicialComplex& M, const Chain& z) {
    if (z.k < 1 || z.k > M.top_dim()) throw std::invalid_argument("boundary: dimension out of range");
    Chain out(z.k - 1, static_cast<std::size_t>(M.count(z.k - 1)));
    for (std::size_t j : z.bits.support())
        for (int fi : M.facet_indices(z.k, static_cast<int>(j))) out.bits.flip(fi);
    return out;
}

Cochain coboundary(const SimplicialComplex& M, const Cochain& w) {
    if (w.k < 0 || w.k >= M.top_dim()) throw std::invalid_argument("coboundary: dimension out of range");
    Cochain out(w.k + 1, static_cast<std::size_t>(M.count(w.k + 1)));
    for (int j = 0; j < M.count(w.k + 1); ++j) {
        int parity = 0;
        for (int fi : M.facet_indices(w.k + 1, j)) parity ^= w.bits.get(fi) ? 1 : 0;
        if (parity) out.bits.set(j);
    }
    return out;
}

bool is_cycle(const SimplicialComplex& M, const Chain& z) {
    if (z.k == 0) return true;
    return boundary(M, z).is_zero();
}

bool is_cocycle(const SimplicialComplex& M, const Cochain& w) {
    if (w.k == M.top_dim()) return true;
    return coboundary(M, w).is_zero();
}

bool is_closed_pseudomanifold(const SimplicialComplex& M) {
    if (!M.pure()) return false;
    const int n = M.top_dim();
    if (M.count(n) == 0) return false;
    if (n == 0) return M.count(0) == 1;

    for (int i = 0; i < M.count(n - 1); ++i)
        if (M.cofaces(n - 1, i).size() != 2) return false;

    // dual graph connectivity over top simplices
    const int nt = M.count(n);
    std::vector<char> seen(nt, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int t = q.front();
        q.pop();
        for (int fi : M.facet_indices(n, t)) {
            for (int u : M.cofaces(n - 1, fi)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    q.push(u);
                }
            }
        }
    }
    return reached == nt;
}

SubComplex::SubComplex(const SimplicialComplex& parent) : parent_(&parent) {
    member_.reserve(static_cast<std::size_t>(parent.top_dim()) + 1);
    for (int d = 0; d <= parent.top_dim(); ++d)
        member_.emplace_back(static_cast<std::size_t>(parent.count(d)));
}

void SubComplex::close() {
    for (int d = static_cast<int>(member_.size()) - 1; d >= 1; --d) {
        for (std::size_t i : member_[d].support()) {
            for (int fi : parent_->facet_indices(d, static_cast<int>(i)))
                member_[d - 1].set(fi);
        }
    }
}

bool SubComplex::is_closed() const {
    for (int d = 1; d < static_cast<int>(member_.size()); ++d)
        for (std::size_t i : member_[d].support())
            for (int fi : parent_->facet_indices(d, static_cast<int>(i)))
                if (!member_[d - 1].get(fi)) return false;
    return true;
}

bool SubComplex::empty() const {
    for (const auto& m : member_) if (m.any()) return false;
    return true;
}

int SubComplex::dim() const {
    for (int d = static_cast<int>(member_.size()) - 1; d >= 0; --d)
        if (member_[d].any()) return d;
    return -1;
}

std::vector<Vertex> SubComplex::vertex_list() const {
    std::vector<Vertex> out;
    for (std::size_t i : member_[0].support())
        out.push_back(parent_->simplex(0, static_cast<int>(i)).vertex(0));
    return out;
}

std::vector<std::vector<Vertex>> SubComplex::maximal_vertex_lists() const {
    std::vector<std::vector<Vertex>> out;
    for (int d = 0; d < static_cast<int>(member_.size()); ++d) {
        for (std::size_t i : member_[d].support()) {
            bool covered = false;
            if (d + 1 < static_cast<int>(member_.size())) {
                for (int c : parent_->cofaces(d, static_cast<int>(i)))
                    if (member_[d + 1].get(c)) { covered = true; break; }
            }
            if (!covered) out.push_back(parent_->simplex(d, static_cast<int>(i)).vertices());
        }
    }
    return out;
}

SimplicialComplex SubComplex::as_complex(int declared_dim) const {
    if (empty()) throw std::invalid_argument("as_complex: empty subcomplex");
    int d = declared_dim < 0 ? dim() : declared_dim;
    return SimplicialComplex::build(maximal_vertex_lists(), d);
}

SubComplex SubComplex::whole(const SimplicialComplex& parent) {
    SubComplex s(parent);
    for (int d = 0; d <= parent.top_dim(); ++d)
        for (int i = 0; i < parent.count(d); ++i) s.member_[d].set(i);
    return s;
}

SubComplex SubComplex::skeleton(const SimplicialComplex& parent, int d) {
    SubComplex s(parent);
    for (int dd = 0; dd <= d && dd <= parent.top_dim(); ++dd)
        for (int i = 0; i < parent.count(dd); ++i) s.member_[dd].set(i);
    return s;
}

SubComplex SubComplex::closure_of(const SimplicialComplex& parent, int d,
                                  const std::vector<int>& indices) {
    SubComplex s(parent);
    for (int i : indices) s.member_[d].set(i);
    s.close();
    return s;
}

} // namespace z2sys
