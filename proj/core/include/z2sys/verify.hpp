#ifndef Z2SYS_VERIFY_HPP
#define Z2SYS_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "z2sys/cut.hpp"
#include "z2sys/metric.hpp"

namespace z2sys {

/**
 * One line of a verification report.  Rows are long-format: an instance, a
 * named check, an optional numeric value with certification flag, and a
 * pass/fail bit.  Ratio rows always pass (they are measurements, not
 * assertions); invariant rows gate the process exit status.
 */
struct ReportRow {
    std::string instance;
    std::string family;
    int n = 0;
    long long vol = 0;
    double eps = 0.0;
    std::uint64_t seed = 0;
    std::string suite;
    std::string check;
    std::string value = "-";
    std::string certified = "-";
    bool ok = true;
    std::string detail;
};

struct VerificationReport {
    std::vector<ReportRow> rows;

    void add(ReportRow row) { rows.push_back(std::move(row)); }
    void merge(const VerificationReport& other) {
        rows.insert(rows.end(), other.rows.begin(), other.rows.end());
    }
    bool all_ok() const {
        for (const auto& r : rows)
            if (!r.ok) return false;
        return true;
    }
    // stable CSV: header comment with schema version, rows sorted by
    // (instance, suite, check); no wall-clock content
    std::string to_csv() const;
};

struct Instance {
    std::string name;
    std::string family;
    SimplicialComplex complex;
};

// ---- lemma suites ----

// level-set inequality at every vertex and radius up to the diameter
VerificationReport coarea_suite(const Instance& inst);

// randomized separation property over sampled edge paths
VerificationReport separation_suite(const Instance& inst, std::uint64_t seed, int paths);

// random cycles in admissible balls: factored loops are short, sum back, and
// die under alpha
VerificationReport factoring_suite(const Instance& inst, const CohomologyClass& alpha,
                                   std::uint64_t seed, int cycles,
                                   const SearchOptions& opts = {});

// greedy disjoint-subfamily contract on balls at the vertices of a cutting
// complex
VerificationReport vitali_suite(const Instance& inst, const CutComplex& H,
                                VitaliOrder order);

// randomized sphere surgery: the cutting property must survive
VerificationReport cut_paste_suite(const Instance& inst, const CohomologyClass& alpha,
                                   const CutComplex& H, std::uint64_t seed, int trials,
                                   const SearchOptions& opts = {});

// duality equality: exhaustive cut against the dual-class cycle oracle, plus
// the cycle condition on the minimal complex
VerificationReport duality_equality_suite(const Instance& inst, const CohomologyClass& alpha,
                                          bool seed_upper_bound,
                                          const SearchOptions& opts = {});

// ---- theorem harnesses ----

struct TheoremOutcome {
    MinWeightResult sys;
    CutResult cut;
    double ratio = 0.0;  // sys * cut / Vol^{1+eps}
    bool r_le_v = false;
    bool area_bounded = false;  // area <= (n+1) Vol
};

// the systole-times-cut estimate and its proof-level sanity bounds
TheoremOutcome verify_theorem(const SimplicialComplex& M, const CohomologyClass& alpha,
                              double eps, const CutOptions& opts = {});
VerificationReport theorem_suite(const Instance& inst, const CohomologyClass& alpha,
                                 double eps, const CutOptions& opts = {});

struct MulticlassOutcome {
    bool cup_nonzero = false;
    std::vector<MinWeightResult> factors;
    CutResult cut;
    double ratio = 0.0;  // product of systoles * cut / Vol^{1+eps}
    bool duality_identity_checked = false;
    bool duality_identity_holds = false;
};

// several 1-classes with nonvanishing cup product: product of systoles times
// the cut of the cup class
MulticlassOutcome verify_multiclass(const SimplicialComplex& M,
                                    const std::vector<CohomologyClass>& alphas, double eps,
                                    const CutOptions& opts = {});
VerificationReport multiclass_suite(const Instance& inst,
                                    const std::vector<CohomologyClass>& alphas, double eps,
                                    const CutOptions& opts = {});

// ---- helpers shared by the CLI and the acceptance suite ----

// random edge path of the given length (walks are allowed to backtrack)
std::vector<Vertex> random_edge_path(const SimplicialComplex& M, std::mt19937_64& rng,
                                     int length);

// uniformly random element of the cycle space of the 1-skeleton inside a
// ball, via fundamental cycles of a spanning forest
Chain random_cycle_in_ball(const SimplicialComplex& M, const BallSphere& bs,
                           std::mt19937_64& rng);

} // namespace z2sys

#endif
