#include "z2sys/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace z2sys {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

ReportRow base_row(const Instance& inst, const std::string& suite, const std::string& check) {
    ReportRow r;
    r.instance = inst.name;
    r.family = inst.family;
    r.n = inst.complex.top_dim();
    r.vol = inst.complex.volume();
    r.suite = suite;
    r.check = check;
    return r;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string VerificationReport::to_csv() const {
    std::vector<const ReportRow*> sorted;
    sorted.reserve(rows.size());
    for (const auto& r : rows) sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(), [](const ReportRow* a, const ReportRow* b) {
        if (a->instance != b->instance) return a->instance < b->instance;
        if (a->suite != b->suite) return a->suite < b->suite;
        return a->check < b->check;
    });

    std::ostringstream out;
    out << "# z2sys verify report, schema v1\n";
    out << "instance,family,n,vol,eps,seed,suite,check,value,certified,ok,detail\n";
    for (const ReportRow* r : sorted) {
        out << csv_escape(r->instance) << ',' << csv_escape(r->family) << ',' << r->n << ','
            << r->vol << ',' << fmt_double(r->eps) << ',' << r->seed << ','
            << csv_escape(r->suite) << ',' << csv_escape(r->check) << ','
            << csv_escape(r->value) << ',' << r->certified << ',' << (r->ok ? 1 : 0) << ','
            << csv_escape(r->detail) << '\n';
    }
    return out.str();
}

VerificationReport coarea_suite(const Instance& inst) {
    const SimplicialComplex& M = inst.complex;
    VerificationReport rep;
    long long violations = 0, checks = 0;
    const int diam = diameter(M);
    for (Vertex x = 0; x < M.vertex_count(); ++x) {
        for (int r = 0; r <= diam; ++r) {
            const auto res = coarea_check(M, x, r);
            ++checks;
            if (!res.ok || !res.witness_injective) ++violations;
        }
    }
    auto row = base_row(inst, "lemmas", "coarea");
    row.value = std::to_string(checks);
    row.ok = violations == 0;
    row.detail = "violations=" + std::to_string(violations);
    rep.add(row);
    return rep;
}

std::vector<Vertex> random_edge_path(const SimplicialComplex& M, std::mt19937_64& rng,
                                     int length) {
    std::uniform_int_distribution<int> pick_vertex(0, M.vertex_count() - 1);
    std::vector<Vertex> path;
    Vertex v = pick_vertex(rng);
    path.push_back(v);
    for (int i = 0; i < length; ++i) {
        const auto& nb = M.adjacency()[v];
        if (nb.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
        v = nb[pick(rng)];
        path.push_back(v);
    }
    return path;
}

VerificationReport separation_suite(const Instance& inst, std::uint64_t seed, int paths) {
    const SimplicialComplex& M = inst.complex;
    VerificationReport rep;
    std::mt19937_64 rng(seed);
    const int diam = std::max(1, diameter(M));
    std::uniform_int_distribution<int> pick_vertex(0, M.vertex_count() - 1);
    std::uniform_int_distribution<int> pick_r(1, diam);
    std::uniform_int_distribution<int> pick_len(1, 2 * diam + 2);

    long long violations = 0;
    for (int t = 0; t < paths; ++t) {
        const Vertex x = pick_vertex(rng);
        const int r = pick_r(rng);
        const auto path = random_edge_path(M, rng, pick_len(rng));
        if (!check_separation(M, x, r, path)) ++violations;
    }
    auto row = base_row(inst, "lemmas", "separation");
    row.seed = seed;
    row.value = std::to_string(paths);
    row.ok = violations == 0;
    row.detail = "violations=" + std::to_string(violations);
    rep.add(row);
    return rep;
}

Chain random_cycle_in_ball(const SimplicialComplex& M, const BallSphere& bs,
                           std::mt19937_64& rng) {
    // spanning forest over ball edges; fundamental cycles of non-tree edges
    const int nv = M.vertex_count();
    std::vector<int> comp(nv, -1);
    std::vector<Vertex> par(nv, -1);
    std::vector<int> par_edge(nv, -1);

    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (std::size_t e : bs.ball.members(1).support()) {
        const Simplex& s = M.simplex(1, static_cast<int>(e));
        adj[s.vertex(0)].push_back({s.vertex(1), static_cast<int>(e)});
        adj[s.vertex(1)].push_back({s.vertex(0), static_cast<int>(e)});
    }

    std::vector<char> tree_edge(M.count(1), 0);
    int ncomp = 0;
    for (std::size_t vi : bs.ball.members(0).support()) {
        const Vertex root = M.simplex(0, static_cast<int>(vi)).vertex(0);
        if (comp[root] >= 0) continue;
        comp[root] = ncomp;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[u]) {
                if (comp[w] >= 0) continue;
                comp[w] = ncomp;
                par[w] = u;
                par_edge[w] = e;
                tree_edge[e] = 1;
                stack.push_back(w);
            }
        }
        ++ncomp;
    }

    Chain out(1, static_cast<std::size_t>(M.count(1)));
    auto xor_tree_path = [&](Vertex a, Vertex b) {
        // walk both ends up to the root; parity cancels above the meeting point
        std::vector<char> mark(nv, 0);
        for (Vertex u = a; u >= 0; u = par[u]) mark[u] ^= 1;
        for (Vertex u = b; u >= 0; u = par[u]) mark[u] ^= 1;
        for (Vertex u = a; u >= 0 && par[u] >= 0; u = par[u])
            if (mark[u]) out.bits.flip(par_edge[u]);
        for (Vertex u = b; u >= 0 && par[u] >= 0; u = par[u])
            if (mark[u]) out.bits.flip(par_edge[u]);
    };

    for (std::size_t e : bs.ball.members(1).support()) {
        if (tree_edge[e]) continue;
        if (rng() & 1) {
            const Simplex& s = M.simplex(1, static_cast<int>(e));
            out.bits.flip(e);
            xor_tree_path(s.vertex(0), s.vertex(1));
        }
    }
    return out;
}

VerificationReport factoring_suite(const Instance& inst, const CohomologyClass& alpha,
                                   std::uint64_t seed, int cycles, const SearchOptions& opts) {
    const SimplicialComplex& M = inst.complex;
    VerificationReport rep;
    std::mt19937_64 rng(seed);

    const MinWeightResult sys = double_cover_shortest_loop(M, alpha, opts);
    const long long r_max = (sys.weight - 2) / 2;  // r < (R-1)/2

    long long violations = 0, nontrivial_samples = 0;
    std::uniform_int_distribution<int> pick_vertex(0, M.vertex_count() - 1);
    for (int t = 0; t < cycles; ++t) {
        const Vertex x = pick_vertex(rng);
        const int r = r_max >= 0
                          ? std::uniform_int_distribution<int>(0, static_cast<int>(r_max))(rng)
                          : 0;
        if (r_max < 0) break;  // vacuous regime: no admissible radius
        const auto bs = ball(M, x, r);
        const Chain ell = random_cycle_in_ball(M, bs, rng);
        if (!ell.is_zero()) ++nontrivial_samples;

        const auto loops = factor_cycle(M, x, r, ell);
        Chain sum(1, static_cast<std::size_t>(M.count(1)));
        bool bad = false;
        for (const auto& loop : loops) {
            if (static_cast<long long>(loop.edge_length()) > 2ll * r + 1) bad = true;
            if (alpha.representative.bits.dot(loop.chain.bits)) bad = true;
            sum ^= loop.chain;
        }
        if (!(sum == ell)) bad = true;
        if (alpha.representative.bits.dot(ell.bits)) bad = true;
        if (bad) ++violations;
    }

    auto row = base_row(inst, "lemmas", "curve_factoring");
    row.seed = seed;
    row.value = std::to_string(nontrivial_samples);
    row.ok = violations == 0;
    row.detail = "violations=" + std::to_string(violations) +
                 ";sys=" + std::to_string(sys.weight);
    rep.add(row);
    return rep;
}

VerificationReport vitali_suite(const Instance& inst, const CutComplex& H, VitaliOrder order) {
    const SimplicialComplex& M = inst.complex;
    VerificationReport rep;
    std::vector<std::pair<Vertex, int>> balls;
    for (Vertex v : H.complex.vertex_list()) balls.push_back({v, 1});

    const auto res = vitali_subcover(M, H.complex, balls, order);
    auto row = base_row(inst, "lemmas", "vitali");
    row.value = std::to_string(res.selected.size());
    row.ok = res.ok;
    row.detail = res.ok ? ("selected=" + std::to_string(res.selected.size())) : res.failure;
    rep.add(row);
    return rep;
}

VerificationReport cut_paste_suite(const Instance& inst, const CohomologyClass& alpha,
                                   const CutComplex& H, std::uint64_t seed, int trials,
                                   const SearchOptions& opts) {
    const SimplicialComplex& M = inst.complex;
    VerificationReport rep;
    std::mt19937_64 rng(seed);

    const MinWeightResult sys = double_cover_shortest_loop(M, alpha, opts);
    const long long r_max = (sys.weight - 2) / 2;

    long long violations = 0, executed = 0;
    const int cd = H.codim_dim;
    for (int t = 0; t < trials && r_max >= 0; ++t) {
        // random admissible superset of H still cuts alpha
        SubComplex sub = H.complex;
        std::uniform_int_distribution<int> extra(0, 3);
        std::uniform_int_distribution<int> pick_cd(0, std::max(0, M.count(cd) - 1));
        for (int j = extra(rng); j > 0; --j) sub.add(cd, pick_cd(rng));
        sub.close();
        CutComplex Hr{sub, cd, sub.count(cd), false};

        const auto verts = sub.vertex_list();
        std::uniform_int_distribution<std::size_t> pick_v(0, verts.size() - 1);
        const Vertex x = verts[pick_v(rng)];
        const int r = std::uniform_int_distribution<int>(0, static_cast<int>(r_max))(rng);
        ++executed;
        try {
            (void)cut_and_paste(M, Hr, alpha, x, r, opts);
        } catch (const std::logic_error&) {
            ++violations;
        }
    }

    auto row = base_row(inst, "lemmas", "cut_and_paste");
    row.seed = seed;
    row.value = std::to_string(executed);
    row.ok = violations == 0;
    row.detail = "violations=" + std::to_string(violations);
    rep.add(row);
    return rep;
}

VerificationReport duality_equality_suite(const Instance& inst, const CohomologyClass& alpha,
                                          bool seed_upper_bound, const SearchOptions& opts) {
    const SimplicialComplex& M = inst.complex;
    VerificationReport rep;

    DualityMap dm(M, alpha.k);
    auto row = base_row(inst, "lemmas", "duality_equality");
    if (!dm.nondegenerate()) {
        row.ok = false;
        row.detail = "degenerate pairing";
        rep.add(row);
        return rep;
    }

    const HomologyClass astar = dm.dual(alpha);
    MinWeightResult dual_cycle = min_weight_in_class(dm.back_pair(), astar, opts);

    CutOptions copts;
    copts.search = opts;
    copts.strategy = CutStrategy::Exhaustive;
    copts.seed_upper_bound = seed_upper_bound;
    CutResult cut = cut_alpha(M, alpha, copts);

    const bool equal = cut.search.weight == dual_cycle.weight;
    const bool both_certified = cut.search.certified && dual_cycle.certified;

    // the minimal complex's top simplices must form a cycle in the dual class
    const Chain& top = cut.search.chain;
    const bool top_is_cycle = is_cycle(M, top);
    const bool top_in_class =
        top_is_cycle && dm.back_pair().chain_coordinates(top) == astar.coords;

    row.value = std::to_string(cut.search.weight);
    row.certified = both_certified ? "1" : "0";
    row.ok = equal && both_certified && top_is_cycle && top_in_class;
    row.detail = "cut=" + std::to_string(cut.search.weight) +
                 ";dual_cycle=" + std::to_string(dual_cycle.weight) +
                 ";top_cycle=" + std::to_string(top_is_cycle ? 1 : 0) +
                 ";top_in_class=" + std::to_string(top_in_class ? 1 : 0);
    rep.add(row);
    return rep;
}

TheoremOutcome verify_theorem(const SimplicialComplex& M, const CohomologyClass& alpha,
                              double eps, const CutOptions& opts) {
    TheoremOutcome out;
    HomologyPair hk(M, alpha.k);
    out.sys = sys_detected(M, hk, alpha, opts.search);
    out.cut = cut_alpha(M, alpha, opts);
    const double v = static_cast<double>(M.volume());
    out.ratio = static_cast<double>(out.sys.weight) * static_cast<double>(out.cut.search.weight) /
                std::pow(v, 1.0 + eps);
    out.r_le_v = out.sys.weight <= M.volume();
    out.area_bounded = out.cut.search.weight <= (M.top_dim() + 1) * M.volume();
    return out;
}

VerificationReport theorem_suite(const Instance& inst, const CohomologyClass& alpha,
                                 double eps, const CutOptions& opts) {
    VerificationReport rep;
    const auto out = verify_theorem(inst.complex, alpha, eps, opts);

    auto sys_row = base_row(inst, "theorem", "sys_alpha");
    sys_row.eps = eps;
    sys_row.value = std::to_string(out.sys.weight);
    sys_row.certified = out.sys.certified ? "1" : "0";
    sys_row.detail = out.sys.method;
    rep.add(sys_row);

    auto cut_row = base_row(inst, "theorem", "cut_alpha");
    cut_row.eps = eps;
    cut_row.value = std::to_string(out.cut.search.weight);
    cut_row.certified = out.cut.search.certified ? "1" : "0";
    cut_row.detail = out.cut.search.method;
    rep.add(cut_row);

    auto ratio_row = base_row(inst, "theorem", "ratio");
    ratio_row.eps = eps;
    ratio_row.value = fmt_double(out.ratio);
    rep.add(ratio_row);  // measurements never fail the run

    auto rv = base_row(inst, "theorem", "sys_le_vol");
    rv.eps = eps;
    rv.value = std::to_string(out.sys.weight);
    rv.ok = out.r_le_v;
    rep.add(rv);

    auto ab = base_row(inst, "theorem", "area_le_bound");
    ab.eps = eps;
    ab.value = std::to_string(out.cut.search.weight);
    ab.ok = out.area_bounded;
    ab.detail = "bound=" + std::to_string((inst.complex.top_dim() + 1) * inst.complex.volume());
    rep.add(ab);
    return rep;
}

MulticlassOutcome verify_multiclass(const SimplicialComplex& M,
                                    const std::vector<CohomologyClass>& alphas, double eps,
                                    const CutOptions& opts) {
    if (alphas.empty()) throw std::invalid_argument("verify_multiclass: no classes");
    MulticlassOutcome out;

    int total_k = 0;
    for (const auto& a : alphas) total_k += a.k;
    if (total_k > M.top_dim())
        throw std::invalid_argument("verify_multiclass: cup dimension exceeds the complex");

    // cup product of all classes
    Cochain cup = alphas.front().representative;
    for (std::size_t i = 1; i < alphas.size(); ++i)
        cup = cup_product(M, cup, alphas[i].representative);
    HomologyPair hcup(M, total_k);
    const CohomologyClass cup_class = hcup.cohomology_class(cup);
    out.cup_nonzero = !cup_class.is_trivial();
    if (!out.cup_nonzero) throw std::domain_error("verify_multiclass: cup product vanishes");

    for (const auto& a : alphas) {
        HomologyPair hk(M, a.k);
        out.factors.push_back(sys_detected(M, hk, a, opts.search));
    }
    out.cut = cut_alpha(M, cup_class, opts);

    double prod = 1.0;
    for (const auto& f : out.factors) prod *= static_cast<double>(f.weight);
    out.ratio = prod * static_cast<double>(out.cut.search.weight) /
                std::pow(static_cast<double>(M.volume()), 1.0 + eps);

    DualityMap dm(M, total_k);
    if (dm.nondegenerate()) {
        out.duality_identity_checked = true;
        const HomologyClass dual = dm.dual(cup_class);
        MinWeightResult mw = min_weight_in_class(dm.back_pair(), dual, opts.search);
        out.duality_identity_holds = mw.weight == out.cut.search.weight;
    }
    return out;
}

VerificationReport multiclass_suite(const Instance& inst,
                                    const std::vector<CohomologyClass>& alphas, double eps,
                                    const CutOptions& opts) {
    VerificationReport rep;
    const auto out = verify_multiclass(inst.complex, alphas, eps, opts);

    auto cup_row = base_row(inst, "multiclass", "cup_nonzero");
    cup_row.eps = eps;
    cup_row.value = out.cup_nonzero ? "1" : "0";
    cup_row.ok = out.cup_nonzero;
    rep.add(cup_row);

    for (std::size_t i = 0; i < out.factors.size(); ++i) {
        auto row = base_row(inst, "multiclass", "sys_alpha_" + std::to_string(i));
        row.eps = eps;
        row.value = std::to_string(out.factors[i].weight);
        row.certified = out.factors[i].certified ? "1" : "0";
        row.detail = out.factors[i].method;
        rep.add(row);
    }

    auto cut_row = base_row(inst, "multiclass", "cut_cup");
    cut_row.eps = eps;
    cut_row.value = std::to_string(out.cut.search.weight);
    cut_row.certified = out.cut.search.certified ? "1" : "0";
    cut_row.detail = out.cut.search.method;
    rep.add(cut_row);

    auto ratio_row = base_row(inst, "multiclass", "ratio");
    ratio_row.eps = eps;
    ratio_row.value = fmt_double(out.ratio);
    rep.add(ratio_row);

    if (out.duality_identity_checked) {
        auto dual_row = base_row(inst, "multiclass", "duality_identity");
        dual_row.eps = eps;
        dual_row.value = out.duality_identity_holds ? "1" : "0";
        dual_row.ok = out.duality_identity_holds;
        rep.add(dual_row);
    }
    return rep;
}

} // namespace z2sys
