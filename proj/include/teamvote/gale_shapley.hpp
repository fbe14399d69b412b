// Men-proposing deferred acceptance with a full proposal trace.

#ifndef TEAMVOTE_GALE_SHAPLEY_HPP
#define TEAMVOTE_GALE_SHAPLEY_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "teamvote/core.hpp"

namespace teamvote {

struct MatchOutcome {
    std::vector<int> man_to_woman;
    std::vector<int> woman_to_man;
    std::vector<std::vector<int>> proposals;  // o(w): men that proposed to w, sorted
    int rounds = 0;

    bool proposed(int man, int woman) const {
        const auto& o = proposals[woman];
        return std::binary_search(o.begin(), o.end(), man);
    }
};

/// Runs the round-based GS procedure: in each round every unmatched man
/// proposes to his favorite woman among those who have not rejected him
/// (ascending man index within a round), then every woman keeps her
/// favorite proposal. Terminates after at most k^2 proposals.
inline MatchOutcome run_gs(const std::vector<PreferenceOrder>& men,
                           const std::vector<PreferenceOrder>& women) {
    const int k = static_cast<int>(men.size());
    if (static_cast<int>(women.size()) != k)
        throw std::invalid_argument("run_gs: profile size mismatch");
    for (const auto& o : men)
        if (o.k() != k) throw std::invalid_argument("run_gs: man's order has wrong size");
    for (const auto& o : women)
        if (o.k() != k) throw std::invalid_argument("run_gs: woman's order has wrong size");

    // rank_w[w][m]: position of m in w's order.
    std::vector<std::vector<int>> rank_w(k, std::vector<int>(k));
    for (int w = 0; w < k; ++w)
        for (int p = 0; p < k; ++p) rank_w[w][women[w].ranking[p]] = p;

    std::vector<int> next(k, 0);  // next woman (by position) each man will try
    std::vector<int> engaged(k, -1);
    std::vector<int> match_of_man(k, -1);
    std::vector<std::vector<int>> proposals(k);

    MatchOutcome out;
    int rounds = 0;
    while (true) {
        // Proposal phase.
        std::vector<std::pair<int, int>> made;  // (man, woman)
        for (int m = 0; m < k; ++m) {
            if (match_of_man[m] != -1) continue;
            if (next[m] >= k) throw std::logic_error("run_gs: man exhausted his list");
            int w = men[m].ranking[next[m]];
            made.emplace_back(m, w);
            proposals[w].push_back(m);
        }
        if (made.empty()) break;
        ++rounds;
        // Rejection phase.
        for (auto [m, w] : made) {
            if (engaged[w] == -1 || rank_w[w][m] < rank_w[w][engaged[w]]) {
                if (engaged[w] != -1) {
                    match_of_man[engaged[w]] = -1;
                    ++next[engaged[w]];
                }
                engaged[w] = m;
                match_of_man[m] = w;
            } else {
                ++next[m];
            }
        }
    }

    out.man_to_woman = std::move(match_of_man);
    out.woman_to_man = std::move(engaged);
    for (auto& o : proposals) std::sort(o.begin(), o.end());
    out.proposals = std::move(proposals);
    out.rounds = rounds;
    return out;
}

/// All pairs (m, w) with w above μ(m) in m's order and m above μ(w) in
/// w's order. Empty iff the matching is stable.
inline std::vector<std::pair<int, int>> blocking_pairs(
    const std::vector<int>& man_to_woman,
    const std::vector<PreferenceOrder>& men,
    const std::vector<PreferenceOrder>& women) {
    const int k = static_cast<int>(men.size());
    std::vector<int> woman_to_man(k, -1);
    for (int m = 0; m < k; ++m) {
        int w = man_to_woman[m];
        if (w < 0 || w >= k || woman_to_man[w] != -1)
            throw std::invalid_argument("blocking_pairs: matching is not a bijection");
        woman_to_man[w] = m;
    }
    std::vector<std::pair<int, int>> blocks;
    for (int m = 0; m < k; ++m) {
        for (int w = 0; w < k; ++w) {
            if (man_to_woman[m] == w) continue;
            bool m_prefers = men[m].position(w) < men[m].position(man_to_woman[m]);
            bool w_prefers = women[w].position(m) < women[w].position(woman_to_man[w]);
            if (m_prefers && w_prefers) blocks.emplace_back(m, w);
        }
    }
    return blocks;
}

/// GS with the team agent's row replaced by override_order; everyone
/// else reports truthfully.
inline MatchOutcome match_with(const Instance& inst, const PreferenceOrder& override_order) {
    if (override_order.k() != inst.k)
        throw std::invalid_argument("match_with: override order has wrong candidate space");
    if (inst.team.side == Side::Men) {
        auto men = inst.men;
        men[inst.team.index] = override_order;
        return run_gs(men, inst.women);
    }
    auto women = inst.women;
    women[inst.team.index] = override_order;
    return run_gs(inst.men, women);
}

/// The team agent's spouse under the given override order.
inline int team_match(const Instance& inst, const PreferenceOrder& override_order) {
    auto out = match_with(inst, override_order);
    return inst.team.side == Side::Men ? out.man_to_woman[inst.team.index]
                                       : out.woman_to_man[inst.team.index];
}

}  // namespace teamvote

#endif
