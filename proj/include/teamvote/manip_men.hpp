// Manipulation from the proposing side: a single voter, or a coalition
// with a 1-additive guarantee.

#ifndef TEAMVOTE_MANIP_MEN_HPP
#define TEAMVOTE_MANIP_MEN_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "teamvote/core.hpp"
#include "teamvote/gale_shapley.hpp"

namespace teamvote {

enum class FailReason { None, InfeasibleTarget, VerificationFailed };

struct BlockerAnalysis {
    std::vector<int> blockers;     // B, in discovery order
    PreferenceOrder target_order;  // the final ≻_x
    bool feasible = false;
};

namespace detail {

/// Move candidate c immediately below `anchor` in the order.
inline void move_below(PreferenceOrder& order, int c, int anchor) {
    auto& r = order.ranking;
    r.erase(std::find(r.begin(), r.end(), c));
    auto it = std::find(r.begin(), r.end(), anchor);
    r.insert(it + 1, c);
}

/// Candidates sorted from most to least preferred under the given
/// scores, restricted to `subset`.
inline std::vector<int> by_descending_score(const std::vector<int>& subset,
                                            const ScoreVector& scores,
                                            const TieBreak& tb) {
    auto ranks = tb.ranks();
    auto sorted = subset;
    std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return ranks[a] < ranks[b];
    });
    return sorted;
}

}  // namespace detail

/// Iteratively finds the set B of women that keep the target from being
/// the team man's match, rebuilding ≻_x until his GS match is either
/// the target (feasible) or someone he ranks below it (infeasible).
inline BlockerAnalysis analyze_blockers(const Instance& inst, int target, const TieBreak& tb) {
    if (inst.team.side != Side::Men)
        throw std::invalid_argument("analyze_blockers: team must be on the men's side");
    if (target < 0 || target >= inst.k)
        throw std::invalid_argument("analyze_blockers: target out of range");

    BlockerAnalysis res;
    res.target_order = inst.team_order(tb);
    for (int iter = 0; iter <= inst.k; ++iter) {
        int b = team_match(inst, res.target_order);
        if (b == target) {
            res.feasible = true;
            return res;
        }
        if (res.target_order.position(b) > res.target_order.position(target)) {
            res.feasible = false;
            return res;
        }
        res.blockers.push_back(b);
        detail::move_below(res.target_order, b, target);
    }
    throw std::logic_error("analyze_blockers: loop exceeded k iterations");
}

struct SingleManipResult {
    std::optional<PreferenceOrder> ballot;
    FailReason reason = FailReason::None;
};

namespace detail {

/// Ballot layout shared by the single and coalition men-side solvers:
/// target on top, non-blockers next (most preferred first), blockers in
/// the lowest positions in reverse order of `ref_scores`.
inline PreferenceOrder build_men_ballot(int k, int target, const std::vector<int>& blockers,
                                        const ScoreVector& ref_scores, const TieBreak& tb) {
    PartialBallot ballot(k);
    ballot.place(0, target);
    std::vector<int> others;
    for (int w = 0; w < k; ++w)
        if (w != target && std::find(blockers.begin(), blockers.end(), w) == blockers.end())
            others.push_back(w);
    for (int w : by_descending_score(others, ref_scores, tb)) ballot.place_highest_free(w);
    auto ordered = by_descending_score(blockers, ref_scores, tb);
    for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) ballot.place_highest_free(*it);
    return ballot.to_order();
}

}  // namespace detail

/// Single-manipulator solver for the men's side. Sound by the final GS
/// verification, complete over all k! ballots.
inline SingleManipResult single_manip_m(const Instance& inst, int target, const TieBreak& tb) {
    auto analysis = analyze_blockers(inst, target, tb);
    if (!analysis.feasible) return {std::nullopt, FailReason::InfeasibleTarget};

    auto honest = inst.honest_scores();
    auto ballot = detail::build_men_ballot(inst.k, target, analysis.blockers, honest, tb);
    if (team_match(inst, inst.team_order(as_extras(std::vector{ballot}), tb)) == target)
        return {ballot, FailReason::None};
    return {std::nullopt, FailReason::VerificationFailed};
}

struct CoalitionManipResult {
    std::optional<std::vector<PreferenceOrder>> profile;
    FailReason reason = FailReason::None;
    // Trace for diagnostics and property checks: the ballots built per
    // stage and the running scores after each stage (stage_scores[0] is
    // the honest tally, stage_scores[r] the tally after r ballots).
    std::vector<PreferenceOrder> stage_ballots;
    std::vector<ScoreVector> stage_scores;
};

/// Coalition solver for the men's side: each stage builds one ballot as
/// in the single solver but orders the blockers by the running
/// aggregate F(L ∪ L_R). 1-additive: succeeds with n manipulators
/// whenever the instance is manipulable with n-1.
inline CoalitionManipResult coalition_manip_m(const Instance& inst, int target,
                                              const TieBreak& tb) {
    auto analysis = analyze_blockers(inst, target, tb);
    CoalitionManipResult res;
    if (!analysis.feasible) {
        res.reason = FailReason::InfeasibleTarget;
        return res;
    }

    std::vector<PreferenceOrder> profile;
    res.stage_scores.push_back(inst.honest_scores());
    for (int r = 0; r < inst.num_manipulators; ++r) {
        auto running = total_scores(inst.k, inst.ballots, inst.base_scores, as_extras(profile));
        auto ballot = detail::build_men_ballot(inst.k, target, analysis.blockers, running, tb);
        profile.push_back(ballot);
        res.stage_ballots.push_back(ballot);
        res.stage_scores.push_back(
            total_scores(inst.k, inst.ballots, inst.base_scores, as_extras(profile)));
    }

    if (team_match(inst, inst.team_order(as_extras(profile), tb)) == target) {
        res.profile = std::move(profile);
        return res;
    }
    res.reason = FailReason::VerificationFailed;
    return res;
}

}  // namespace teamvote

#endif
