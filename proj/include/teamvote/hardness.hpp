// Generators: Permutation Sum reduction gadgets (both sides), a
// best-effort ballot realization of a prescribed score vector, and
// seeded random instances.

#ifndef TEAMVOTE_HARDNESS_HPP
#define TEAMVOTE_HARDNESS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "teamvote/core.hpp"

namespace teamvote {

/// Reduction gadget for a Permutation Sum input X (q integers summing
/// to q(q+1)). k = q + 3 agents per side.
///
/// Candidate index mapping (candidates = the side the team's ballots
/// rank): the target spouse is index 0 so the canonical tie-break
/// favors it in every score tie; the X-carrying candidates are indices
/// 1..q; index q+1 carries the top phantom score 2q+4+C; index q+2
/// carries z. Every rival agent on the team's side ranks the opposite
/// side in ascending index order, as does every agent on the opposite
/// side (so the team agent, index 0 on its side, is everyone's first
/// choice). Two manipulators succeed on the gadget iff X admits a
/// Permutation Sum solution.
inline Instance gen_reduction(const std::vector<long long>& X, Side side, long long C,
                              long long z) {
    const int q = static_cast<int>(X.size());
    const int k = q + 3;
    if (q < 1) throw std::invalid_argument("gen_reduction: X must be non-empty");
    if (!std::is_sorted(X.begin(), X.end()))
        throw std::invalid_argument("gen_reduction: X must be sorted non-decreasing");
    long long sum = std::accumulate(X.begin(), X.end(), 0LL);
    if (sum != static_cast<long long>(q) * (q + 1))
        throw std::invalid_argument("gen_reduction: sum of X must equal q(q+1)");
    if (z > C || z < 0)
        throw std::invalid_argument("gen_reduction: need 0 <= z <= C");
    if (2 * q + 4 + C - X.back() < 0)
        throw std::invalid_argument("gen_reduction: C too small, scores would be negative");

    Instance inst;
    inst.k = k;
    inst.men.assign(k, identity_order(k));
    inst.women.assign(k, identity_order(k));
    inst.team = AgentRef{side, 0};
    inst.num_manipulators = 2;
    inst.target = 0;

    ScoreVector base(k, 0);
    base[0] = C;
    for (int i = 1; i <= q; ++i) base[i] = 2 * q + 4 + C - X[i - 1];
    base[q + 1] = 2 * q + 4 + C;
    base[q + 2] = z;
    inst.base_scores = std::move(base);
    inst.validate();
    return inst;
}

inline Instance gen_reduction(const std::vector<long long>& X, Side side) {
    const long long q = static_cast<long long>(X.size());
    const long long C = 2 * q * (q + 3);
    return gen_reduction(X, side, C, C);
}

/// Ballots whose Borda tallies equal `target` up to a uniform additive
/// shift (all pairwise differences exact). Bounded greedy; nullopt if
/// no ballot count up to max_ballots works. An empty list is a valid
/// answer for a uniform target.
inline std::optional<std::vector<PreferenceOrder>> realize_scores_as_ballots(
    const ScoreVector& target, int max_ballots = 64) {
    const int k = static_cast<int>(target.size());
    if (k < 1) throw std::invalid_argument("realize_scores_as_ballots: empty target");
    Score lo = *std::min_element(target.begin(), target.end());
    ScoreVector diff(k);
    for (int c = 0; c < k; ++c) diff[c] = target[c] - lo;
    if (std::all_of(diff.begin(), diff.end(), [](Score d) { return d == 0; }))
        return std::vector<PreferenceOrder>{};
    if (k == 1) return std::nullopt;  // single candidate can never differ

    const Score per_ballot = static_cast<Score>(k) * (k - 1) / 2;
    Score diff_sum = std::accumulate(diff.begin(), diff.end(), Score{0});
    Score max_diff = *std::max_element(diff.begin(), diff.end());

    for (int n = 1; n <= max_ballots; ++n) {
        if (max_diff > static_cast<Score>(n) * (k - 1)) continue;
        Score total = static_cast<Score>(n) * per_ballot;
        if ((total - diff_sum) % k != 0) continue;
        Score shift = (total - diff_sum) / k;
        if (shift < 0) continue;
        ScoreVector residual(k);
        bool feasible = true;
        for (int c = 0; c < k; ++c) {
            residual[c] = diff[c] + shift;
            if (residual[c] > static_cast<Score>(n) * (k - 1)) feasible = false;
        }
        if (!feasible) continue;

        std::vector<PreferenceOrder> ballots;
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) {
            std::vector<int> order(k);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int a, int c) {
                if (residual[a] != residual[c]) return residual[a] > residual[c];
                return a < c;
            });
            for (int p = 0; p < k; ++p) {
                residual[order[p]] -= k - 1 - p;
                if (residual[order[p]] < 0) ok = false;
            }
            ballots.emplace_back(std::move(order));
        }
        if (!ok || std::any_of(residual.begin(), residual.end(), [](Score r) { return r != 0; }))
            continue;

        // Recount to be sure the construction is exact.
        auto tally = total_scores(k, ballots);
        for (int c = 1; c < k; ++c)
            if (tally[c] - tally[0] != target[c] - target[0]) return std::nullopt;
        return ballots;
    }
    return std::nullopt;
}

namespace detail {

/// Portable Fisher-Yates: identical output for a given engine state on
/// every platform (std::shuffle is not reproducible across stdlibs).
inline void shuffle_portable(std::vector<int>& v, std::mt19937_64& rng) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
        auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(v[i], v[j]);
    }
}

inline PreferenceOrder random_order(int k, std::mt19937_64& rng) {
    auto o = identity_order(k);
    shuffle_portable(o.ranking, rng);
    return o;
}

}  // namespace detail

/// Uniform-random instance; team agent is index 0 of the chosen side.
/// Deterministic for a fixed seed.
inline Instance gen_random(int k, int num_voters, int num_manipulators, Side side,
                           std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("gen_random: k must be >= 1");
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.k = k;
    for (int i = 0; i < k; ++i) inst.men.push_back(detail::random_order(k, rng));
    for (int i = 0; i < k; ++i) inst.women.push_back(detail::random_order(k, rng));
    for (int v = 0; v < num_voters; ++v) inst.ballots.push_back(detail::random_order(k, rng));
    inst.team = AgentRef{side, 0};
    inst.num_manipulators = num_manipulators;
    inst.target = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    inst.validate();
    return inst;
}

}  // namespace teamvote

#endif
