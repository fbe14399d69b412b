// Exhaustive ground-truth solvers. These certify the polynomial
// algorithms on small instances and refuse anything larger than their
// budget rather than silently truncating.

#ifndef TEAMVOTE_ORACLE_HPP
#define TEAMVOTE_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "teamvote/core.hpp"
#include "teamvote/gale_shapley.hpp"

namespace teamvote {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleBudget {
    int max_k = 7;
    int max_manipulators = 3;
    std::int64_t max_enumerations = 5'000'000;
};

namespace detail {

inline std::int64_t factorial_checked(int n, std::int64_t cap) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
        if (f > cap) return cap + 1;
    }
    return f;
}

/// C(a + n - 1, n), saturating at cap + 1.
inline std::int64_t multisets_checked(std::int64_t a, int n, std::int64_t cap) {
    __int128 r = 1;
    for (int i = 1; i <= n; ++i) {
        r = r * (a + i - 1) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::int64_t>(r);
}

inline std::vector<PreferenceOrder> all_ballots(int k) {
    std::vector<PreferenceOrder> out;
    auto perm = identity_order(k);
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.ranking.begin(), perm.ranking.end()));
    return out;
}

}  // namespace detail

/// Tries every ballot in lexicographic order; returns the first one
/// achieving the target match.
inline std::optional<PreferenceOrder> brute_single(const Instance& inst, int target,
                                                   const TieBreak& tb,
                                                   const OracleBudget& budget = {}) {
    if (inst.k > budget.max_k ||
        detail::factorial_checked(inst.k, budget.max_enumerations) > budget.max_enumerations)
        throw BudgetExceeded("brute_single: k! exceeds the enumeration budget");
    auto perm = identity_order(inst.k);
    do {
        if (team_match(inst, inst.team_order(as_extras(std::vector{perm}), tb)) == target)
            return perm;
    } while (std::next_permutation(perm.ranking.begin(), perm.ranking.end()));
    return std::nullopt;
}

/// Enumerates multisets of n ballots (Borda tallies do not depend on
/// which manipulator casts which ballot) and returns the first witness
/// profile.
inline std::optional<std::vector<PreferenceOrder>> brute_coalition(
    const Instance& inst, int n, int target, const TieBreak& tb,
    const OracleBudget& budget = {}) {
    if (n < 0) throw std::invalid_argument("brute_coalition: negative coalition size");
    if (inst.k > budget.max_k || n > budget.max_manipulators)
        throw BudgetExceeded("brute_coalition: instance exceeds the oracle budget");
    if (n == 0) {
        if (team_match(inst, inst.team_order(tb)) == target)
            return std::vector<PreferenceOrder>{};
        return std::nullopt;
    }
    auto fact = detail::factorial_checked(inst.k, budget.max_enumerations);
    if (detail::multisets_checked(fact, n, budget.max_enumerations) > budget.max_enumerations)
        throw BudgetExceeded("brute_coalition: multiset count exceeds the enumeration budget");

    auto ballots = detail::all_ballots(inst.k);
    std::vector<int> pick(n, 0);
    std::vector<PreferenceOrder> profile;
    while (true) {
        profile.clear();
        for (int i : pick) profile.push_back(ballots[i]);
        if (team_match(inst, inst.team_order(as_extras(profile), tb)) == target)
            return profile;
        // Next non-decreasing index tuple.
        int i = n - 1;
        while (i >= 0 && pick[i] + 1 == static_cast<int>(ballots.size())) --i;
        if (i < 0) return std::nullopt;
        int v = pick[i] + 1;
        for (int j = i; j < n; ++j) pick[j] = v;
    }
}

/// All stable matchings, as man-to-woman vectors in lexicographic
/// order. Nonempty by GS existence.
inline std::vector<std::vector<int>> enumerate_stable(
    const std::vector<PreferenceOrder>& men, const std::vector<PreferenceOrder>& women,
    const OracleBudget& budget = {}) {
    const int k = static_cast<int>(men.size());
    if (k > budget.max_k ||
        detail::factorial_checked(k, budget.max_enumerations) > budget.max_enumerations)
        throw BudgetExceeded("enumerate_stable: k! exceeds the enumeration budget");
    std::vector<std::vector<int>> stable;
    std::vector<int> matching(k);
    std::iota(matching.begin(), matching.end(), 0);
    do {
        if (blocking_pairs(matching, men, women).empty()) stable.push_back(matching);
    } while (std::next_permutation(matching.begin(), matching.end()));
    return stable;
}

/// Witness permutations (1-based) with sigma[i] + pi[i] == X[i], if any.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> solve_permutation_sum(
    const std::vector<long long>& X, const OracleBudget& budget = {}) {
    const int q = static_cast<int>(X.size());
    if (!std::is_sorted(X.begin(), X.end()))
        throw std::invalid_argument("solve_permutation_sum: X must be sorted non-decreasing");
    long long sum = 0;
    for (long long x : X) sum += x;
    if (sum != static_cast<long long>(q) * (q + 1))
        throw std::invalid_argument("solve_permutation_sum: sum of X must equal q(q+1)");
    if (detail::factorial_checked(q, budget.max_enumerations) > budget.max_enumerations)
        throw BudgetExceeded("solve_permutation_sum: q! exceeds the enumeration budget");

    std::vector<int> sigma(q);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        std::vector<int> pi(q);
        std::vector<char> used(q + 1, 0);
        bool ok = true;
        for (int i = 0; i < q && ok; ++i) {
            long long p = X[i] - sigma[i];
            if (p < 1 || p > q || used[p]) ok = false;
            else {
                pi[i] = static_cast<int>(p);
                used[p] = 1;
            }
        }
        if (ok) return std::make_pair(sigma, pi);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

}  // namespace teamvote

#endif
