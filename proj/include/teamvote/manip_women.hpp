// Manipulation from the proposed-to side. The manipulators must park a
// second-best proposal (m_nd) right behind the target so that the
// target stays the team woman's best offer.

#ifndef TEAMVOTE_MANIP_WOMEN_HPP
#define TEAMVOTE_MANIP_WOMEN_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "teamvote/core.hpp"
#include "teamvote/gale_shapley.hpp"
#include "teamvote/manip_men.hpp"

namespace teamvote {

struct SecondProposal {
    int m_nd = -1;
    std::vector<PartialBallot> seeds;  // one per manipulator; single case: one
    Score achieved_score = 0;          // s(m_nd, L ∪ seeds)
};

namespace detail {

inline bool prefers_by_tiebreak(int a, int b, const TieBreak& tb) {
    auto r = tb.ranks();
    return r[a] < r[b];
}

/// Candidates m != target in descending F(L) order. Iterating in this
/// order means score ties between m_nd candidates resolve toward the
/// stronger rival, which is the one worth neutralizing as m_nd.
inline std::vector<int> mnd_candidates(const Instance& inst, int target, const TieBreak& tb) {
    auto order = aggregate(inst.honest_scores(), tb);
    std::vector<int> cands;
    for (int m : order.ranking)
        if (m != target) cands.push_back(m);
    return cands;
}

inline ScoreVector scores_with_seeds(const Instance& inst,
                                     const std::vector<PartialBallot>& seeds) {
    return total_scores(inst.k, inst.ballots, inst.base_scores, as_extras(seeds));
}

/// μ(ŵ, seeds) == target and m ∈ o(ŵ, seeds)?
inline bool seed_passes(const Instance& inst, const std::vector<PartialBallot>& seeds,
                        int target, int m, const TieBreak& tb) {
    auto out = match_with(inst, aggregate(scores_with_seeds(inst, seeds), tb));
    return out.woman_to_man[inst.team.index] == target && out.proposed(m, inst.team.index);
}

}  // namespace detail

/// Scans every rival m for the best second-proposal seed: m as high as
/// possible while the target still beats him in F(L ∪ ℓ_r'), gated by
/// the GS checks. Single-manipulator version.
inline std::optional<SecondProposal> find_second_proposal_single(const Instance& inst,
                                                                 int target,
                                                                 const TieBreak& tb) {
    if (inst.team.side != Side::Women)
        throw std::invalid_argument("find_second_proposal_single: team must be on the women's side");
    const int k = inst.k;
    auto honest = inst.honest_scores();

    std::optional<SecondProposal> best;
    for (int m : detail::mnd_candidates(inst, target, tb)) {
        PartialBallot seed(k);
        seed.place(0, m);
        seed.place(1, target);
        Score s_m = honest[m] + (k - 1);
        Score s_t = honest[target] + (k - 2);
        if (beats(m, s_m, target, s_t, tb)) {
            // m on top overtakes the target: flip, and push m to the
            // highest position that keeps the target ahead.
            seed = PartialBallot(k);
            seed.place(0, target);
            s_t = honest[target] + (k - 1);
            int pos = -1;
            for (int p = 1; p < k; ++p) {
                if (beats(target, s_t, m, honest[m] + (k - 1 - p), tb)) {
                    pos = p;
                    break;
                }
            }
            if (pos < 0) continue;
            seed.place(pos, m);
            s_m = honest[m] + (k - 1 - pos);
        }
        std::vector<PartialBallot> seeds{seed};
        if (!detail::seed_passes(inst, seeds, target, m, tb)) continue;
        // Strict improvement only: on equal seeded scores the earlier
        // candidate (stronger honest rival) stays m_nd.
        if (!best || s_m > best->achieved_score)
            best = SecondProposal{m, std::move(seeds), s_m};
    }
    return best;
}

namespace detail {

/// Completes the manipulator ballots: non-blockers into the highest
/// free positions (most preferred first by fill_scores), then B into
/// the remaining lowest positions in reverse order of block_scores.
inline void fill_ballot(PartialBallot& ballot, const std::vector<int>& blockers,
                        const ScoreVector& fill_scores, const ScoreVector& block_scores,
                        const TieBreak& tb) {
    const int k = ballot.k();
    std::vector<int> others;
    for (int m = 0; m < k; ++m)
        if (!ballot.is_placed(m) &&
            std::find(blockers.begin(), blockers.end(), m) == blockers.end())
            others.push_back(m);
    for (int m : by_descending_score(others, fill_scores, tb)) ballot.place_highest_free(m);
    std::vector<int> pending;
    for (int m : blockers)
        if (!ballot.is_placed(m)) pending.push_back(m);
    auto ordered = by_descending_score(pending, block_scores, tb);
    for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) ballot.place_highest_free(*it);
}

/// The trivial witness when the target is already the match: a ballot
/// identical to F(L ∪ current) leaves the aggregate unchanged.
inline PreferenceOrder neutral_ballot(const Instance& inst, const TieBreak& tb) {
    return inst.team_order(tb);
}

}  // namespace detail

/// Single-manipulator solver for the women's side.
inline SingleManipResult single_manip_w(const Instance& inst, int target, const TieBreak& tb) {
    if (inst.team.side != Side::Women)
        throw std::invalid_argument("single_manip_w: team must be on the women's side");
    if (target < 0 || target >= inst.k)
        throw std::invalid_argument("single_manip_w: target out of range");

    if (team_match(inst, inst.team_order(tb)) == target) {
        auto ballot = detail::neutral_ballot(inst, tb);
        if (team_match(inst, inst.team_order(as_extras(std::vector{ballot}), tb)) == target)
            return {ballot, FailReason::None};
        return {std::nullopt, FailReason::VerificationFailed};
    }

    auto sp = find_second_proposal_single(inst, target, tb);
    if (!sp) return {std::nullopt, FailReason::InfeasibleTarget};

    auto seeds = sp->seeds;
    auto seeded_scores = detail::scores_with_seeds(inst, seeds);
    auto out = match_with(inst, aggregate(seeded_scores, tb));
    std::vector<int> blockers;
    for (int m : out.proposals[inst.team.index])
        if (m != target && m != sp->m_nd) blockers.push_back(m);

    PartialBallot ballot = seeds[0];
    detail::fill_ballot(ballot, blockers, seeded_scores, inst.honest_scores(), tb);
    auto full = ballot.to_order();
    if (team_match(inst, inst.team_order(as_extras(std::vector{full}), tb)) == target)
        return {full, FailReason::None};
    return {std::nullopt, FailReason::VerificationFailed};
}

/// Stage 1 of the coalition solver: choose m_nd and seed all |R|
/// ballots with the target and m_nd placements dictated by the score
/// gap between them.
inline std::optional<SecondProposal> coalition_stage1_w(const Instance& inst, int target,
                                                        const TieBreak& tb) {
    if (inst.team.side != Side::Women)
        throw std::invalid_argument("coalition_stage1_w: team must be on the women's side");
    const int k = inst.k;
    const int n = inst.num_manipulators;
    if (n < 1) return std::nullopt;
    if (k < 3) throw std::invalid_argument("coalition_stage1_w: requires k >= 3");

    auto honest = inst.honest_scores();
    std::optional<SecondProposal> best;
    for (int m : detail::mnd_candidates(inst, target, tb)) {
        Score gap = honest[m] - honest[target];
        if (detail::prefers_by_tiebreak(m, target, tb)) gap += 1;
        if (static_cast<Score>(n) * (k - 1) < gap) continue;

        std::vector<PartialBallot> seeds(n, PartialBallot(k));
        if (n >= gap) {
            // ceil((n - gap) / 2); n - gap >= 0 here.
            Score straight = std::max<Score>(gap + (n - gap + 1) / 2, 0);
            for (int i = 0; i < n; ++i) {
                if (i < straight) {
                    seeds[i].place(0, target);
                    seeds[i].place(1, m);
                } else {
                    seeds[i].place(0, m);
                    seeds[i].place(1, target);
                }
            }
        } else {
            for (auto& s : seeds) s.place(0, target);
            Score bottoms = std::min<Score>((gap - n) / (k - 2), n - 1);
            for (int i = 0; i < n - 1; ++i)
                seeds[i].place(i < bottoms ? k - 1 : 1, m);
            // Last ballot: m as high as possible with the target still ahead.
            Score s_t = honest[target] + static_cast<Score>(n) * (k - 1);
            Score s_m_rest = honest[m];
            for (int i = 0; i < n - 1; ++i) s_m_rest += seeds[i].score_of(m);
            int pos = -1;
            for (int p = 1; p < k; ++p) {
                if (beats(target, s_t, m, s_m_rest + (k - 1 - p), tb)) {
                    pos = p;
                    break;
                }
            }
            if (pos < 0) continue;
            seeds[n - 1].place(pos, m);
        }

        if (!detail::seed_passes(inst, seeds, target, m, tb)) continue;
        Score s_m = detail::scores_with_seeds(inst, seeds)[m];
        if (!best || s_m > best->achieved_score)
            best = SecondProposal{m, std::move(seeds), s_m};
    }
    return best;
}

struct CoalitionManipResultW {
    std::optional<std::vector<PreferenceOrder>> profile;
    FailReason reason = FailReason::None;
    int m_nd = -1;
    std::vector<int> blockers;  // B after stage 1
    // Running tallies: stage_scores[0] with the seeds only, then after
    // each completed ballot.
    std::vector<ScoreVector> stage_scores;
    std::vector<PreferenceOrder> stage_ballots;
};

namespace detail {

/// k <= 2 has no room for the gap arithmetic; the ballot space is tiny,
/// so decide exhaustively.
inline CoalitionManipResultW coalition_w_exhaustive(const Instance& inst, int target,
                                                    const TieBreak& tb) {
    CoalitionManipResultW res;
    std::vector<PreferenceOrder> all;
    auto perm = identity_order(inst.k);
    do {
        all.push_back(perm);
    } while (std::next_permutation(perm.ranking.begin(), perm.ranking.end()));

    std::vector<PreferenceOrder> profile(inst.num_manipulators, all[0]);
    std::vector<int> pick(inst.num_manipulators, 0);
    while (true) {
        for (int i = 0; i < inst.num_manipulators; ++i) profile[i] = all[pick[i]];
        if (team_match(inst, inst.team_order(as_extras(profile), tb)) == target) {
            res.profile = profile;
            return res;
        }
        int i = inst.num_manipulators - 1;
        while (i >= 0 && pick[i] + 1 == static_cast<int>(all.size())) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
    }
    res.reason = FailReason::InfeasibleTarget;
    return res;
}

}  // namespace detail

/// Two-stage coalition solver for the women's side. 1-additive:
/// succeeds with n manipulators whenever the instance is manipulable
/// with n-1.
inline CoalitionManipResultW coalition_manip_w(const Instance& inst, int target,
                                               const TieBreak& tb) {
    if (inst.team.side != Side::Women)
        throw std::invalid_argument("coalition_manip_w: team must be on the women's side");
    if (target < 0 || target >= inst.k)
        throw std::invalid_argument("coalition_manip_w: target out of range");
    const int n = inst.num_manipulators;

    CoalitionManipResultW res;
    if (team_match(inst, inst.team_order(tb)) == target) {
        std::vector<PreferenceOrder> profile(n, detail::neutral_ballot(inst, tb));
        if (team_match(inst, inst.team_order(as_extras(profile), tb)) == target) {
            res.profile = std::move(profile);
            return res;
        }
        res.reason = FailReason::VerificationFailed;
        return res;
    }
    if (n < 1) {
        res.reason = FailReason::InfeasibleTarget;
        return res;
    }
    if (inst.k <= 2) return detail::coalition_w_exhaustive(inst, target, tb);

    auto sp = coalition_stage1_w(inst, target, tb);
    if (!sp) {
        res.reason = FailReason::InfeasibleTarget;
        return res;
    }
    res.m_nd = sp->m_nd;

    std::vector<PartialBallot> ballots = sp->seeds;
    auto seeded_scores = detail::scores_with_seeds(inst, ballots);
    auto out = match_with(inst, aggregate(seeded_scores, tb));
    for (int m : out.proposals[inst.team.index])
        if (m != target && m != sp->m_nd) res.blockers.push_back(m);

    res.stage_scores.push_back(seeded_scores);
    for (int r = 0; r < n; ++r) {
        auto running = total_scores(inst.k, inst.ballots, inst.base_scores, as_extras(ballots));
        detail::fill_ballot(ballots[r], res.blockers, running, running, tb);
        res.stage_ballots.push_back(ballots[r].to_order());
        res.stage_scores.push_back(
            total_scores(inst.k, inst.ballots, inst.base_scores, as_extras(ballots)));
    }

    std::vector<PreferenceOrder> profile;
    for (const auto& b : ballots) profile.push_back(b.to_order());
    if (team_match(inst, inst.team_order(as_extras(profile), tb)) == target) {
        res.profile = std::move(profile);
        return res;
    }
    res.reason = FailReason::VerificationFailed;
    return res;
}

}  // namespace teamvote

#endif
