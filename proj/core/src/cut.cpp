#include "z2sys/cut.hpp"

#include <chrono>
#include <cmath>

namespace z2sys {

namespace {

CutComplex make_cut(const SimplicialComplex& M, SubComplex sub, int codim_dim, bool verified) {
    (void)M;
    CutComplex c;
    c.complex = std::move(sub);
    c.codim_dim = codim_dim;
    c.area = c.complex.count(codim_dim);
    c.verified = verified;
    return c;
}

// next lexicographic size-w index combination in [0, n)
bool next_combination(std::vector<int>& c, int n) {
    const int w = static_cast<int>(c.size());
    for (int i = w - 1; i >= 0; --i) {
        if (c[i] < n - (w - i)) {
            ++c[i];
            for (int j = i + 1; j < w; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> support_indices(const BitVector& v) {
    std::vector<int> idx;
    for (std::size_t i : v.support()) idx.push_back(static_cast<int>(i));
    return idx;
}

} // namespace

CutResult cut_alpha(const SimplicialComplex& M, const CohomologyClass& alpha,
                    const CutOptions& opts) {
    if (alpha.is_trivial()) throw std::invalid_argument("cut_alpha: trivial class");
    const int n = M.top_dim();
    const int k = alpha.k;
    const int cd = n - k;

    // duality route: the minimum is a minimum-weight cycle in the dual class
    std::optional<CutResult> dual_route;
    if (opts.strategy != CutStrategy::Exhaustive) {
        DualityMap dm(M, k);
        if (dm.nondegenerate()) {
            const HomologyClass astar = dm.dual(alpha);
            MinWeightResult mw = min_weight_in_class(dm.back_pair(), astar, opts.search);
            SubComplex H = SubComplex::closure_of(M, cd, support_indices(mw.chain.bits));
            if (restricts_to_zero_on_complement(M, H, alpha))
                dual_route = CutResult{make_cut(M, std::move(H), cd, true), std::move(mw)};
            // a failed check falls through to the exhaustive route; on genuine
            // manifolds the dual cycle always cuts
        }
        if (dual_route) return *std::move(dual_route);
        if (opts.strategy == CutStrategy::DualCycle)
            throw std::domain_error("cut_alpha: duality route unavailable on this complex");
    } else if (opts.seed_upper_bound) {
        DualityMap dm(M, k);
        if (dm.nondegenerate()) {
            const HomologyClass astar = dm.dual(alpha);
            MinWeightResult mw = min_weight_in_class(dm.back_pair(), astar, opts.search);
            SubComplex H = SubComplex::closure_of(M, cd, support_indices(mw.chain.bits));
            if (restricts_to_zero_on_complement(M, H, alpha))
                dual_route = CutResult{make_cut(M, std::move(H), cd, true), std::move(mw)};
        }
    }

    // generic route: increasing-cardinality search over (n-k)-simplex sets,
    // each augmented with the full lower skeleton (free by the area count)
    ComplementTester tester(M, alpha.representative);
    const int ncand = M.count(cd);

    long long upper = ncand;  // the full (n-k)-skeleton always cuts
    std::optional<std::vector<int>> upper_set;
    if (dual_route && opts.seed_upper_bound && dual_route->search.certified) {
        upper = dual_route->cut.area;
        upper_set = support_indices(dual_route->search.chain.bits);
    }

    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::milliseconds(opts.search.budget_ms);
    bool out_of_budget = false;
    std::optional<std::vector<int>> found;
    long long tested = 0;

    for (int w = 0; w < upper && !found && !out_of_budget; ++w) {
        if (w == 0) {
            if (tester.vanishes_outside_augmented(cd, {})) found = std::vector<int>{};
            continue;
        }
        if (ncand < w) break;
        std::vector<int> comb(w);
        for (int i = 0; i < w; ++i) comb[i] = i;
        do {
            if ((++tested & 0x3ff) == 0 && std::chrono::steady_clock::now() >= deadline) {
                out_of_budget = true;
                break;
            }
            if (tester.vanishes_outside_augmented(cd, comb)) {
                found = comb;
                break;
            }
        } while (next_combination(comb, ncand));
    }

    std::vector<int> winner;
    bool certified;
    std::string method;
    if (found) {
        // every smaller size was exhausted, so this is a true minimum
        winner = *found;
        certified = true;
        method = "exhaustive_cut";
    } else if (upper_set) {
        winner = *upper_set;
        certified = !out_of_budget;
        method = out_of_budget ? "exhaustive_cut_budget" : "exhaustive_cut_seeded";
    } else {
        winner.resize(ncand);
        for (int i = 0; i < ncand; ++i) winner[i] = i;
        certified = !out_of_budget;
        method = "exhaustive_cut_full_skeleton";
    }

    SubComplex H = SubComplex::skeleton(M, cd - 1);
    for (int i : winner) H.add(cd, i);
    H.close();
    if (!restricts_to_zero_on_complement(M, H, alpha))
        throw std::logic_error("cut_alpha: selected complex fails the cutting check");

    Chain top(cd, static_cast<std::size_t>(M.count(cd)));
    for (int i : winner) top.bits.set(i);
    MinWeightResult mw{top, static_cast<long long>(winner.size()), certified, method};
    return CutResult{make_cut(M, std::move(H), cd, true), std::move(mw)};
}

CutComplex cut_and_paste(const SimplicialComplex& M, const CutComplex& H,
                         const CohomologyClass& alpha, Vertex x, int r,
                         const SearchOptions& opts) {
    if (alpha.k != 1) throw std::invalid_argument("cut_and_paste: needs a 1-cohomology class");
    if (r < 0) throw std::invalid_argument("cut_and_paste: negative radius");
    const int xi = M.index_of(Simplex{{x}});
    if (xi < 0 || !H.complex.contains(0, xi))
        throw std::invalid_argument("cut_and_paste: x is not a vertex of H");

    const MinWeightResult sys = double_cover_shortest_loop(M, alpha, opts);
    if (!(2 * r < sys.weight - 1))
        throw std::invalid_argument("cut_and_paste: radius too large for the systole");

    const BallSphere bs = ball(M, x, r);
    SubComplex out(M);
    for (int d = 0; d <= M.top_dim(); ++d) {
        for (std::size_t i : H.complex.members(d).support())
            if (!bs.ball.contains(d, static_cast<int>(i))) out.add(d, static_cast<int>(i));
        for (std::size_t i : bs.sphere.members(d).support()) out.add(d, static_cast<int>(i));
    }
    out.close();

    if (!restricts_to_zero_on_complement(M, out, alpha))
        throw std::logic_error("cut_and_paste: surgery broke the cutting property");
    return make_cut(M, std::move(out), H.codim_dim, true);
}

long long cut_area_in_ball(const CutComplex& H, const BallSphere& bs) {
    const int d = H.codim_dim;
    long long area = 0;
    for (std::size_t i : H.complex.members(d).support())
        if (bs.ball.contains(d, static_cast<int>(i))) ++area;
    return area;
}

GoodBallOutcome good_ball_search(const SimplicialComplex& M, const CutComplex& H,
                                 const CohomologyClass& alpha, Vertex x, double eps,
                                 const SearchOptions& opts) {
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("good_ball_search: eps in (0,1)");
    const int xi = M.index_of(Simplex{{x}});
    if (xi < 0 || !H.complex.contains(0, xi))
        throw std::invalid_argument("good_ball_search: x is not a vertex of H");

    const MinWeightResult sys = double_cover_shortest_loop(M, alpha, opts);
    const double R = static_cast<double>(sys.weight);
    const double growth = std::pow(R, 1.0 - eps);  // R^{1-eps}

    GoodBallOutcome out;
    out.center = x;

    std::vector<int> ladder;
    for (long long r = 1; r <= sys.weight; r *= 4)
        if (static_cast<double>(r) >= growth) ladder.push_back(static_cast<int>(r));

    if (ladder.size() < 2) {
        out.small_systole_regime = true;
        return out;
    }

    const auto df = distances(M, x);
    for (std::size_t i = 1; i < ladder.size(); ++i) {
        const int r = ladder[i];
        const BallSphere b_r = ball(M, df, r);
        const BallSphere b_quarter = ball(M, df, r / 4);
        LadderStep step;
        step.radius = r;
        step.h_r = cut_area_in_ball(H, b_r);
        step.h_quarter = cut_area_in_ball(H, b_quarter);
        step.threshold = (static_cast<double>(r) / growth) * static_cast<double>(step.h_quarter);
        step.passed = static_cast<double>(step.h_r) <= step.threshold;
        out.trace.push_back(step);
        if (!step.passed) continue;

        // direct verification of the volume-growth certificate
        const BallSphere b_half = ball(M, df, r / 2);
        const long long v_half = b_half.ball_volume();
        const double bound = 4.0 / growth * static_cast<double>(v_half);
        if (static_cast<double>(step.h_r) <= bound) {
            out.found = true;
            out.radius = r;
            out.h_r = step.h_r;
            out.v_half = v_half;
            out.bound = bound;
            return out;
        }
    }
    return out;
}

} // namespace z2sys
