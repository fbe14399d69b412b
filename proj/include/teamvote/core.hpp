// Borda scoring and aggregation into a strict preference order.
//
// Scores are int64. Callers must keep k * (#voters + #manipulators) * k
// below 2^63; at the instance sizes this library targets that is never
// a concern.

#ifndef TEAMVOTE_CORE_HPP
#define TEAMVOTE_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace teamvote {

using Score = std::int64_t;

enum class Side { Men, Women };

inline std::string side_name(Side s) { return s == Side::Men ? "men" : "women"; }

struct AgentRef {
    Side side = Side::Men;
    int index = 0;
};

/// A strict total order: ranking[p] is the candidate at position p
/// (position 0 is the most preferred).
struct PreferenceOrder {
    std::vector<int> ranking;

    PreferenceOrder() = default;
    explicit PreferenceOrder(std::vector<int> r) : ranking(std::move(r)) {}

    int k() const { return static_cast<int>(ranking.size()); }

    int position(int candidate) const {
        for (int p = 0; p < k(); ++p)
            if (ranking[p] == candidate) return p;
        throw std::invalid_argument("candidate not in preference order");
    }

    bool is_permutation_of_k() const {
        std::vector<char> seen(ranking.size(), 0);
        for (int c : ranking) {
            if (c < 0 || c >= k() || seen[c]) return false;
            seen[c] = 1;
        }
        return true;
    }

    bool operator==(const PreferenceOrder& o) const { return ranking == o.ranking; }
};

inline PreferenceOrder identity_order(int k) {
    std::vector<int> r(k);
    std::iota(r.begin(), r.end(), 0);
    return PreferenceOrder{std::move(r)};
}

/// A ballot under construction: slot[p] is the candidate placed at
/// position p, or -1 while the position is still free. Unplaced
/// candidates contribute a score of 0.
struct PartialBallot {
    std::vector<int> slot;

    PartialBallot() = default;
    explicit PartialBallot(int k) : slot(k, -1) {}

    int k() const { return static_cast<int>(slot.size()); }

    bool is_placed(int candidate) const {
        return std::find(slot.begin(), slot.end(), candidate) != slot.end();
    }

    void place(int position, int candidate) {
        if (position < 0 || position >= k())
            throw std::invalid_argument("position out of range");
        if (candidate < 0 || candidate >= k())
            throw std::invalid_argument("candidate out of range");
        if (slot[position] != -1)
            throw std::invalid_argument("position already occupied");
        if (is_placed(candidate))
            throw std::invalid_argument("candidate already placed");
        slot[position] = candidate;
    }

    void unplace(int candidate) {
        for (int& s : slot)
            if (s == candidate) { s = -1; return; }
    }

    /// Highest (best) still-free position, or -1 if full.
    int highest_free() const {
        for (int p = 0; p < k(); ++p)
            if (slot[p] == -1) return p;
        return -1;
    }

    void place_highest_free(int candidate) {
        int p = highest_free();
        if (p < 0) throw std::invalid_argument("ballot is full");
        place(p, candidate);
    }

    Score score_of(int candidate) const {
        for (int p = 0; p < k(); ++p)
            if (slot[p] == candidate) return k() - 1 - p;
        return 0;
    }

    bool complete() const {
        return std::none_of(slot.begin(), slot.end(), [](int s) { return s == -1; });
    }

    PreferenceOrder to_order() const {
        if (!complete()) throw std::invalid_argument("ballot is not complete");
        return PreferenceOrder{slot};
    }
};

using ScoreVector = std::vector<Score>;

using ExtraBallot = std::variant<PreferenceOrder, PartialBallot>;

/// Tie-breaking priority: priority[0] is the candidate that wins every
/// tie. Canonical order is ascending candidate index.
struct TieBreak {
    std::vector<int> priority;

    static TieBreak canonical(int k) { return TieBreak{identity_order(k).ranking}; }

    /// Lower rank = higher priority.
    std::vector<int> ranks() const {
        std::vector<int> r(priority.size());
        for (int p = 0; p < static_cast<int>(priority.size()); ++p) r[priority[p]] = p;
        return r;
    }
};

inline Score borda_score(const PreferenceOrder& ballot, int candidate) {
    if (candidate < 0 || candidate >= ballot.k())
        throw std::invalid_argument("borda_score: candidate out of range");
    return ballot.k() - 1 - ballot.position(candidate);
}

namespace detail {
inline void add_ballot(ScoreVector& scores, const PreferenceOrder& b) {
    if (b.k() != static_cast<int>(scores.size()))
        throw std::invalid_argument("total_scores: ballot size mismatch");
    for (int p = 0; p < b.k(); ++p) scores[b.ranking[p]] += b.k() - 1 - p;
}
inline void add_ballot(ScoreVector& scores, const PartialBallot& b) {
    if (b.k() != static_cast<int>(scores.size()))
        throw std::invalid_argument("total_scores: ballot size mismatch");
    for (int p = 0; p < b.k(); ++p)
        if (b.slot[p] != -1) scores[b.slot[p]] += b.k() - 1 - p;
}
}  // namespace detail

inline ScoreVector total_scores(int k,
                                const std::vector<PreferenceOrder>& honest,
                                const std::optional<ScoreVector>& base = std::nullopt,
                                const std::vector<ExtraBallot>& extra = {}) {
    ScoreVector scores(k, 0);
    if (base) {
        if (static_cast<int>(base->size()) != k)
            throw std::invalid_argument("total_scores: base score size mismatch");
        scores = *base;
    }
    for (const auto& b : honest) detail::add_ballot(scores, b);
    for (const auto& e : extra)
        std::visit([&](const auto& b) { detail::add_ballot(scores, b); }, e);
    return scores;
}

/// True iff candidate c with score s_c is ranked above c' in the
/// aggregate: higher score wins, ties go to the tie-break priority.
inline bool beats(int c, Score s_c, int c_prime, Score s_c_prime, const TieBreak& tb) {
    if (c == c_prime) throw std::invalid_argument("beats: identical candidates");
    if (s_c != s_c_prime) return s_c > s_c_prime;
    const auto r = tb.ranks();
    return r[c] < r[c_prime];
}

/// The social welfare function F: scores to a strict order, ties broken
/// by tb.
inline PreferenceOrder aggregate(const ScoreVector& scores, const TieBreak& tb) {
    const int k = static_cast<int>(scores.size());
    auto ranks = tb.ranks();
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return ranks[a] < ranks[b];
    });
    return PreferenceOrder{std::move(order)};
}

/// A full manipulation problem: both sides' true profiles, the team
/// agent, the honest ballots (and/or phantom base scores), the number
/// of manipulators, and the target spouse. The team agent's own row in
/// its side's profile is a placeholder; its effective order is always
/// the Borda aggregate of the ballots.
struct Instance {
    int k = 0;
    std::vector<PreferenceOrder> men;    // each ranks the women
    std::vector<PreferenceOrder> women;  // each ranks the men
    AgentRef team;
    std::vector<PreferenceOrder> ballots;  // honest voters L
    std::optional<ScoreVector> base_scores;
    int num_manipulators = 0;
    int target = 0;

    void validate() const {
        if (k < 1) throw std::invalid_argument("instance: k must be >= 1");
        auto check_profile = [&](const std::vector<PreferenceOrder>& prof, const char* what) {
            if (static_cast<int>(prof.size()) != k)
                throw std::invalid_argument(std::string("instance: ") + what + " profile must have k rows");
            for (const auto& o : prof)
                if (o.k() != k || !o.is_permutation_of_k())
                    throw std::invalid_argument(std::string("instance: ") + what + " row is not a permutation");
        };
        check_profile(men, "men");
        check_profile(women, "women");
        if (team.index < 0 || team.index >= k)
            throw std::invalid_argument("instance: team index out of range");
        for (const auto& b : ballots)
            if (b.k() != k || !b.is_permutation_of_k())
                throw std::invalid_argument("instance: ballot is not a permutation");
        if (base_scores) {
            if (static_cast<int>(base_scores->size()) != k)
                throw std::invalid_argument("instance: base_scores length mismatch");
            for (Score s : *base_scores)
                if (s < 0) throw std::invalid_argument("instance: base_scores entry negative");
        }
        if (num_manipulators < 0)
            throw std::invalid_argument("instance: num_manipulators negative");
        if (target < 0 || target >= k)
            throw std::invalid_argument("instance: target out of range");
    }

    ScoreVector honest_scores() const { return total_scores(k, ballots, base_scores); }

    /// F(L ∪ extra): the order representing the team agent.
    PreferenceOrder team_order(const std::vector<ExtraBallot>& extra,
                               const TieBreak& tb) const {
        return aggregate(total_scores(k, ballots, base_scores, extra), tb);
    }

    PreferenceOrder team_order(const TieBreak& tb) const { return team_order({}, tb); }
};

inline std::vector<ExtraBallot> as_extras(const std::vector<PreferenceOrder>& ballots) {
    std::vector<ExtraBallot> e;
    e.reserve(ballots.size());
    for (const auto& b : ballots) e.emplace_back(b);
    return e;
}

inline std::vector<ExtraBallot> as_extras(const std::vector<PartialBallot>& ballots) {
    std::vector<ExtraBallot> e;
    e.reserve(ballots.size());
    for (const auto& b : ballots) e.emplace_back(b);
    return e;
}

}  // namespace teamvote

#endif
