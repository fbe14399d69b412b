// Test-only machinery: the inductively defined D-subset of the blocker
// set and the density predicates used by the coalition guarantees.
// Deliberately a literal simulation, independent of the solvers.

#ifndef TEAMVOTE_TESTS_HELPERS_HPP
#define TEAMVOTE_TESTS_HELPERS_HPP

#include <algorithm>
#include <vector>

#include "teamvote/core.hpp"

namespace teamvote::testing {

/// D grows from the strongest blocker: a candidate joins when, between
/// two consecutive stages, it moves from below some member of D to
/// above some member of D in the running aggregate.
///
/// stage_ranks[l][c] = position of candidate c in the aggregate after
/// stage l (stage 0 = before any manipulator ballot). Stages l and l+1
/// are compared for 1 <= l < num_stages.
inline std::vector<int> simulate_d_set(const std::vector<int>& blockers, int seed_member,
                                       const std::vector<std::vector<int>>& stage_ranks) {
    std::vector<int> d{seed_member};
    auto in_d = [&](int c) { return std::find(d.begin(), d.end(), c) != d.end(); };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int b : blockers) {
            if (in_d(b)) continue;
            bool qualifies = false;
            for (std::size_t l = 1; l + 1 < stage_ranks.size() && !qualifies; ++l) {
                bool below_some = false, above_some = false;
                for (int m : d) {
                    if (stage_ranks[l][b] > stage_ranks[l][m]) below_some = true;
                    if (stage_ranks[l + 1][b] < stage_ranks[l + 1][m]) above_some = true;
                }
                qualifies = below_some && above_some;
            }
            if (qualifies) {
                d.push_back(b);
                changed = true;
            }
        }
    }
    return d;
}

/// Strongest member of `blockers` under `scores` (ties by tb) — the
/// D_0 seed.
inline int argmax_blocker(const std::vector<int>& blockers, const ScoreVector& scores,
                          const TieBreak& tb) {
    int best = blockers.front();
    for (int b : blockers)
        if (b != best && beats(b, scores[b], best, scores[best], tb)) best = b;
    return best;
}

inline std::vector<std::vector<int>> ranks_per_stage(
    const std::vector<ScoreVector>& stage_scores, const TieBreak& tb) {
    std::vector<std::vector<int>> ranks;
    for (const auto& s : stage_scores) {
        auto order = aggregate(s, tb);
        std::vector<int> r(order.k());
        for (int p = 0; p < order.k(); ++p) r[order.ranking[p]] = p;
        ranks.push_back(std::move(r));
    }
    return ranks;
}

/// Adjacent gaps of the non-increasing sort are all <= 1.
inline bool is_1_dense(std::vector<Score> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i] - values[i + 1] > 1) return false;
    return true;
}

/// As 1-dense, but at most one adjacent gap may be 2.
inline bool is_almost_1_dense(std::vector<Score> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    int big_gaps = 0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        Score gap = values[i] - values[i + 1];
        if (gap > 2) return false;
        if (gap == 2) ++big_gaps;
    }
    return big_gaps <= 1;
}

}  // namespace teamvote::testing

#endif
