#include "z2sys/homology.hpp"

#include <queue>
#include <stdexcept>

namespace z2sys {

namespace {

// rows of an m x m matrix inverse; throws if singular
std::vector<BitVector> invert_rows(const BinaryMatrix& P) {
    const std::size_t m = P.rows();
    std::vector<BitVector> inv_cols;
    for (std::size_t j = 0; j < m; ++j) {
        BitVector e(m);
        e.set(j);
        auto x = P.solve(e);
        if (!x) throw std::logic_error("homology: degenerate evaluation pairing");
        inv_cols.push_back(*x);
    }
    // inv_cols[j] is column j of P^{-1}; transpose into rows
    std::vector<BitVector> rows(m, BitVector(m));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i : inv_cols[j].support()) rows[i].set(j);
    return rows;
}

} // namespace

HomologyPair::HomologyPair(const SimplicialComplex& M, int k) : M_(&M), k_(k) {
    if (k < 0 || k > M.top_dim()) throw std::invalid_argument("HomologyPair: k out of range");
    const std::size_t nk = static_cast<std::size_t>(M.count(k));
    const int n = M.top_dim();

    // cycle space Z_k
    if (k == 0) {
        cycle_space_.reserve(nk);
        for (std::size_t i = 0; i < nk; ++i) {
            BitVector e(nk);
            e.set(i);
            cycle_space_.push_back(std::move(e));
        }
    } else {
        cycle_space_ = boundary_matrix(M, k).nullspace();
    }

    // boundary space B_k
    if (k < n && M.count(k + 1) > 0) {
        const BinaryMatrix dk1 = boundary_matrix(M, k + 1);
        const BinaryMatrix cols = dk1.transposed();  // rows are boundaries of (k+1)-simplices
        for (std::size_t i : cols.independent_rows()) boundary_space_.push_back(cols.row(i));
    }

    // cocycle space Z^k = ker d_{k+1}^T
    if (k == n || M.count(k + 1) == 0) {
        cocycle_space_.reserve(nk);
        for (std::size_t i = 0; i < nk; ++i) {
            BitVector e(nk);
            e.set(i);
            cocycle_space_.push_back(std::move(e));
        }
    } else {
        cocycle_space_ = boundary_matrix(M, k + 1).transposed().nullspace();
    }

    // coboundary space B^k = row space of d_k
    if (k >= 1) {
        const BinaryMatrix dk = boundary_matrix(M, k);
        for (std::size_t i : dk.independent_rows()) coboundary_space_.push_back(dk.row(i));
    }

    // homology representatives: cycle-space vectors independent of B_k
    std::vector<BitVector> raw_h;
    {
        BinaryMatrix acc(0, nk);
        for (const auto& b : boundary_space_) acc.append_row(b);
        for (const auto& z : cycle_space_) acc.append_row(z);
        auto indep = acc.independent_rows();
        for (std::size_t i : indep)
            if (i >= boundary_space_.size()) raw_h.push_back(acc.row(i));
    }

    // cohomology representatives: cocycle-space vectors independent of B^k
    std::vector<BitVector> raw_g;
    {
        BinaryMatrix acc(0, nk);
        for (const auto& b : coboundary_space_) acc.append_row(b);
        for (const auto& z : cocycle_space_) acc.append_row(z);
        auto indep = acc.independent_rows();
        for (std::size_t i : indep)
            if (i >= coboundary_space_.size()) raw_g.push_back(acc.row(i));
    }

    if (raw_h.size() != raw_g.size())
        throw std::logic_error("homology: H_k and H^k dimensions disagree");

    const std::size_t m = raw_h.size();
    for (const auto& h : raw_h) cycle_reps_.emplace_back(k, h);

    if (m == 0) return;

    // normalize cohomology basis to be dual to the homology basis
    BinaryMatrix P(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (raw_g[i].dot(raw_h[j])) P.set(i, j);
    const auto C = invert_rows(P);  // field coefficients: P is always invertible
    for (std::size_t i = 0; i < m; ++i) {
        BitVector g(nk);
        for (std::size_t l : C[i].support()) g ^= raw_g[l];
        cocycle_reps_.emplace_back(k, std::move(g));
    }
}

BitVector HomologyPair::chain_coordinates(const Chain& z) const {
    if (z.k != k_) throw std::invalid_argument("chain_coordinates: dimension mismatch");
    if (!is_cycle(*M_, z)) throw std::invalid_argument("chain_coordinates: not a cycle");
    BitVector c(cycle_reps_.size());
    for (std::size_t i = 0; i < cocycle_reps_.size(); ++i)
        if (cocycle_reps_[i].bits.dot(z.bits)) c.set(i);
    return c;
}

BitVector HomologyPair::cochain_coordinates(const Cochain& w) const {
    if (w.k != k_) throw std::invalid_argument("cochain_coordinates: dimension mismatch");
    if (!is_cocycle(*M_, w)) throw std::invalid_argument("cochain_coordinates: not a cocycle");
    BitVector c(cycle_reps_.size());
    for (std::size_t i = 0; i < cycle_reps_.size(); ++i)
        if (w.bits.dot(cycle_reps_[i].bits)) c.set(i);
    return c;
}

HomologyClass HomologyPair::homology_class(const Chain& z) const {
    return HomologyClass{k_, chain_coordinates(z), z};
}

CohomologyClass HomologyPair::cohomology_class(const Cochain& w) const {
    return CohomologyClass{k_, cochain_coordinates(w), w};
}

HomologyClass HomologyPair::class_from_coords(const BitVector& coords) const {
    Chain rep(k_, static_cast<std::size_t>(M_->count(k_)));
    for (std::size_t i : coords.support()) rep ^= cycle_reps_[i];
    return HomologyClass{k_, coords, std::move(rep)};
}

CohomologyClass HomologyPair::coclass_from_coords(const BitVector& coords) const {
    Cochain rep(k_, static_cast<std::size_t>(M_->count(k_)));
    for (std::size_t i : coords.support()) rep ^= cocycle_reps_[i];
    return CohomologyClass{k_, coords, std::move(rep)};
}

HomologyClass HomologyPair::zero_class() const {
    return class_from_coords(BitVector(cycle_reps_.size()));
}

CohomologyClass HomologyPair::zero_coclass() const {
    return coclass_from_coords(BitVector(cycle_reps_.size()));
}

std::vector<HomologyClass> homology_basis(const HomologyPair& hp) {
    std::vector<HomologyClass> out;
    for (int i = 0; i < hp.dim(); ++i) {
        BitVector c(hp.dim());
        c.set(i);
        out.push_back(hp.class_from_coords(c));
    }
    return out;
}

std::vector<CohomologyClass> cohomology_basis(const HomologyPair& hp) {
    std::vector<CohomologyClass> out;
    for (int i = 0; i < hp.dim(); ++i) {
        BitVector c(hp.dim());
        c.set(i);
        out.push_back(hp.coclass_from_coords(c));
    }
    return out;
}

bool evaluate(const CohomologyClass& alpha, const HomologyClass& z) {
    if (alpha.k != z.k) throw std::invalid_argument("evaluate: dimension mismatch");
    return alpha.representative.bits.dot(z.representative.bits);
}

bool evaluate(const CohomologyClass& alpha, const Chain& cycle) {
    if (alpha.k != cycle.k) throw std::invalid_argument("evaluate: dimension mismatch");
    return alpha.representative.bits.dot(cycle.bits);
}

Cochain cup_product(const SimplicialComplex& M, const Cochain& a, const Cochain& b) {
    const int k = a.k + b.k;
    if (k > M.top_dim()) throw std::invalid_argument("cup_product: dimension overflow");
    Cochain out(k, static_cast<std::size_t>(M.count(k)));
    for (int i = 0; i < M.count(k); ++i) {
        const Simplex& s = M.simplex(k, i);
        const int fa = M.index_of(s.range_face(0, a.k));
        if (fa < 0 || !a.bits.get(fa)) continue;
        const int fb = M.index_of(s.range_face(a.k, k));
        if (fb >= 0 && b.bits.get(fb)) out.bits.set(i);
    }
    return out;
}

CohomologyClass cup_product(const SimplicialComplex& M, const CohomologyClass& a,
                            const CohomologyClass& b, const HomologyPair& target) {
    Cochain w = cup_product(M, a.representative, b.representative);
    return target.cohomology_class(w);
}

HomologyClass fundamental_class(const SimplicialComplex& M, const HomologyPair& top_pair) {
    if (!is_closed_pseudomanifold(M))
        throw std::domain_error("fundamental_class: not a closed pseudomanifold");
    const int n = M.top_dim();
    Chain z(n, static_cast<std::size_t>(M.count(n)));
    for (int i = 0; i < M.count(n); ++i) z.bits.set(i);
    if (!is_cycle(M, z)) throw std::logic_error("fundamental_class: top chain is not a cycle");
    auto cls = top_pair.homology_class(z);
    if (cls.is_trivial()) throw std::logic_error("fundamental_class: trivial in H_n");
    return cls;
}

DualityMap::DualityMap(const SimplicialComplex& M, int k) : M_(&M), k_(k) {
    const int n = M.top_dim();
    if (k < 0 || k > n) throw std::invalid_argument("DualityMap: k out of range");
    if (!is_closed_pseudomanifold(M)) {
        nondegenerate_ = false;
        return;
    }
    hk_ = std::make_shared<HomologyPair>(M, k);
    hnk_ = std::make_shared<HomologyPair>(M, n - k);
    if (k == n) htop_ = hk_;
    else if (k == 0) htop_ = hnk_;
    else htop_ = std::make_shared<HomologyPair>(M, n);
    fundamental_ = fundamental_class(M, *htop_);

    const int mk = hk_->dim(), mnk = hnk_->dim();
    pairing_ = BinaryMatrix(mk, mnk);
    for (int i = 0; i < mk; ++i) {
        const Cochain& ai = hk_->cocycle_reps()[i];
        for (int j = 0; j < mnk; ++j) {
            const Cochain& bj = hnk_->cocycle_reps()[j];
            Cochain cup = cup_product(M, ai, bj);
            if (cup.bits.dot(fundamental_.representative.bits)) pairing_.set(i, j);
        }
    }
    nondegenerate_ = (mk == mnk) && (pairing_.rank() == static_cast<std::size_t>(mk));
}

HomologyClass DualityMap::dual(const CohomologyClass& alpha) const {
    if (!nondegenerate_) throw std::domain_error("DualityMap: degenerate pairing");
    if (alpha.k != k_) throw std::invalid_argument("DualityMap::dual: dimension mismatch");
    BitVector coords(hnk_->dim());
    for (std::size_t i : alpha.coords.support()) coords ^= pairing_.row(i);
    return hnk_->class_from_coords(coords);
}

CohomologyClass DualityMap::dual_inverse(const HomologyClass& a) const {
    if (!nondegenerate_) throw std::domain_error("DualityMap: degenerate pairing");
    if (a.k != M_->top_dim() - k_)
        throw std::invalid_argument("DualityMap::dual_inverse: dimension mismatch");
    auto y = pairing_.transposed().solve(a.coords);
    if (!y) throw std::logic_error("DualityMap::dual_inverse: unsolvable despite full rank");
    return hk_->coclass_from_coords(*y);
}

ComplementTester::ComplementTester(const SimplicialComplex& M, const Cochain& alpha)
    : M_(&M), k_(alpha.k), sd_(barycentric_subdivision(M)) {
    pulled_ = sd_.pullback(M, alpha);
    const int nv = sd_.complex.count(0);
    stamp_.assign(nv, 0);
    pot_.assign(nv, 0);
    if (k_ == 1) {
        parity_adj_.assign(nv, {});
        for (int e = 0; e < sd_.complex.count(1); ++e) {
            const Simplex& s = sd_.complex.simplex(1, e);
            const char parity = pulled_.bits.get(e) ? 1 : 0;
            parity_adj_[s.vertex(0)].push_back({s.vertex(1), parity});
            parity_adj_[s.vertex(1)].push_back({s.vertex(0), parity});
        }
    }
}

bool ComplementTester::run_parity_bfs(const std::vector<char>& vertex_excluded) const {
    ++epoch_;
    const int nv = static_cast<int>(parity_adj_.size());
    for (int start = 0; start < nv; ++start) {
        if (vertex_excluded[start] || stamp_[start] == epoch_) continue;
        stamp_[start] = epoch_;
        pot_[start] = 0;
        queue_.clear();
        queue_.push_back(start);
        std::size_t head = 0;
        while (head < queue_.size()) {
            const Vertex u = queue_[head++];
            for (const auto& [v, parity] : parity_adj_[u]) {
                if (vertex_excluded[v]) continue;
                if (stamp_[v] != epoch_) {
                    stamp_[v] = epoch_;
                    pot_[v] = pot_[u] ^ parity;
                    queue_.push_back(v);
                } else if ((pot_[u] ^ parity) != pot_[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool ComplementTester::run(const std::vector<char>& vertex_excluded) const {
    if (k_ == 1) return run_parity_bfs(vertex_excluded);

    const SimplicialComplex& S = sd_.complex;
    auto allowed = [&](int d, int i) {
        for (Vertex v : S.simplex(d, i).vertices())
            if (vertex_excluded[v]) return false;
        return true;
    };

    // rows: k-simplices of K, cols: (k-1)-simplices of K
    std::vector<int> col_of(S.count(k_ - 1), -1);
    int ncol = 0;
    for (int i = 0; i < S.count(k_ - 1); ++i)
        if (allowed(k_ - 1, i)) col_of[i] = ncol++;

    BinaryMatrix A(0, ncol);
    std::vector<bool> rhs;
    for (int i = 0; i < S.count(k_); ++i) {
        if (!allowed(k_, i)) continue;
        BitVector row(ncol);
        for (int fi : S.facet_indices(k_, i)) row.set(col_of[fi]);
        A.append_row(row);
        rhs.push_back(pulled_.bits.get(i));
    }
    BitVector y(A.rows());
    for (std::size_t i = 0; i < rhs.size(); ++i)
        if (rhs[i]) y.set(i);
    return A.solve(y).has_value();
}

bool ComplementTester::vanishes_outside(const SubComplex& H) const {
    std::vector<char> excluded(sd_.complex.count(0), 0);
    for (int v = 0; v < sd_.complex.count(0); ++v) {
        const auto [d, i] = sd_.origin[v];
        if (H.contains(d, i)) excluded[v] = 1;
    }
    return run(excluded);
}

bool ComplementTester::vanishes_outside_augmented(int top_dim,
                                                  const std::vector<int>& indices) const {
    std::vector<char> excluded(sd_.complex.count(0), 0);
    for (int v = 0; v < sd_.complex.count(0); ++v)
        if (sd_.origin[v].first < top_dim) excluded[v] = 1;
    // barycenter ids are assigned densely by (dim, index)
    int base = 0;
    for (int d = 0; d < top_dim; ++d) base += M_->count(d);
    for (int i : indices) excluded[base + i] = 1;
    return run(excluded);
}

bool restricts_to_zero_on_complement(const SimplicialComplex& M, const SubComplex& H,
                                     const CohomologyClass& alpha) {
    if (&H.parent() != &M)
        throw std::invalid_argument("restricts_to_zero_on_complement: wrong parent complex");
    if (!H.is_closed())
        throw std::invalid_argument("restricts_to_zero_on_complement: H is not a subcomplex");
    ComplementTester t(M, alpha.representative);
    return t.vanishes_outside(H);
}

RestrictedCochain restrict_to_subcomplex(const SimplicialComplex& M, const SubComplex& H,
                                         const Cochain& w) {
    RestrictedCochain out{H.as_complex(), Cochain{}};
    // parent vertex label -> densified label in the standalone copy
    const auto hv = H.vertex_list();
    std::unordered_map<Vertex, Vertex> dense;
    for (std::size_t i = 0; i < hv.size(); ++i) dense[hv[i]] = static_cast<Vertex>(i);

    const int k = w.k;
    out.cochain = Cochain(k, static_cast<std::size_t>(out.complex.count(k)));
    for (std::size_t i : H.members(k).support()) {
        if (!w.bits.get(i)) continue;
        std::vector<Vertex> mapped;
        for (Vertex v : M.simplex(k, static_cast<int>(i)).vertices())
            mapped.push_back(dense.at(v));
        int idx = out.complex.index_of(Simplex{mapped});
        if (idx < 0) throw std::logic_error("restrict_to_subcomplex: lost simplex");
        out.cochain.bits.set(idx);
    }
    return out;
}

} // namespace z2sys
