#ifndef Z2SYS_MINWEIGHT_HPP
#define Z2SYS_MINWEIGHT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "z2sys/homology.hpp"

namespace z2sys {

struct SearchOptions {
    int enum_cap = 24;        // full coset enumeration while dim <= enum_cap
    int cover_cap = 12;       // homology-cover cap on dim H_1
    int weight_cap = 64;      // iterative-deepening support-weight cap
    long long budget_ms = 60000;
    long long node_cap = 1ll << 22;  // cover graph size cap
    std::uint64_t seed = 0;
    int descent_rounds = 512;
};

struct MinWeightResult {
    Chain chain;
    long long weight = 0;
    bool certified = false;
    std::string method;
};

/**
 * Minimum-weight chain in the homology class a (over the coset a + B_k).
 *
 * Strategy, in order: full coset enumeration while dim B_k <= enum_cap;
 * for k = 1 an exact polynomial search through the GF(2)^h homology cover
 * (loops per class + subset combination) while dim H_1 <= cover_cap;
 * otherwise iterative deepening over the support weight restricted to an
 * information set, certified when the deepening radius catches up with the
 * best weight found; past every budget, randomized information-set descent
 * with certified = false.  The returned chain is re-verified (cycle, class,
 * weight) before returning.
 */
MinWeightResult min_weight_in_class(const HomologyPair& hp, const HomologyClass& a,
                                    const SearchOptions& opts = {});

/**
 * Shortest loop detected by a 1-cohomology class, via breadth-first search
 * on the 2-fold cover with fiber swaps across the support of a cocycle
 * representative.  Always certified; independent of the representative.
 */
MinWeightResult double_cover_shortest_loop(const SimplicialComplex& M,
                                           const CohomologyClass& alpha,
                                           const SearchOptions& opts = {});

/**
 * Minimum-weight k-cycle detected by alpha (evaluating to 1).  For k = 1
 * this delegates to the double cover; otherwise it searches the affine
 * subspace of detected cycles.
 */
MinWeightResult sys_detected(const SimplicialComplex& M, const HomologyPair& hk,
                             const CohomologyClass& alpha, const SearchOptions& opts = {});

// minimum-weight cycle with nontrivial class (the k-systole)
MinWeightResult min_nontrivial_cycle(const HomologyPair& hk, const SearchOptions& opts = {});

// minimum-weight cocycle with nontrivial class (the transposed-complex systole)
MinWeightResult min_nontrivial_cocycle(const HomologyPair& hk, const SearchOptions& opts = {});

// Shared engine: minimize weight over { offset + span(basis) } subject to an
// optional predicate.  Exposed for reuse by the cut search and tests.
struct AffineSearch {
    BitVector offset;
    std::vector<BitVector> basis;
    std::function<bool(const BitVector&)> accept;  // may be empty
};

std::optional<std::pair<BitVector, bool>> min_weight_affine(const AffineSearch& space,
                                                            const SearchOptions& opts);

} // namespace z2sys

#endif
