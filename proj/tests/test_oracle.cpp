#include <doctest.h>

#include <random>

#include "teamvote/hardness.hpp"
#include "teamvote/oracle.hpp"

using namespace teamvote;

TEST_CASE("k=1 single oracle is trivially yes") {
    auto inst = gen_random(1, 1, 1, Side::Men, 1);
    auto tb = TieBreak::canonical(1);
    auto w = brute_single(inst, 0, tb);
    REQUIRE(w.has_value());
    CHECK(w->ranking == std::vector<int>{0});
}

TEST_CASE("single oracle returns the lexicographically first witness") {
    std::mt19937_64 rng(41);
    int found = 0;
    for (int trial = 0; trial < 200 && found < 40; ++trial) {
        auto inst = gen_random(3, 2, 1, Side::Men, rng());
        auto tb = TieBreak::canonical(3);
        auto w = brute_single(inst, inst.target, tb);
        if (!w) continue;
        ++found;
        CHECK(team_match(inst, inst.team_order(as_extras(std::vector{*w}), tb)) ==
              inst.target);
        // Nothing lexicographically smaller works.
        auto perm = identity_order(3);
        do {
            if (perm == *w) break;
            CHECK(team_match(inst, inst.team_order(as_extras(std::vector{perm}), tb)) !=
                  inst.target);
        } while (std::next_permutation(perm.ranking.begin(), perm.ranking.end()));
    }
    CHECK(found == 40);
}

TEST_CASE("budget refusals") {
    auto tb8 = TieBreak::canonical(8);
    auto inst8 = gen_random(8, 1, 1, Side::Men, 2);
    CHECK_THROWS_AS(brute_single(inst8, 0, tb8), BudgetExceeded);
    CHECK_THROWS_AS(brute_coalition(inst8, 1, 0, tb8), BudgetExceeded);

    auto inst4 = gen_random(4, 1, 4, Side::Men, 3);
    CHECK_THROWS_AS(brute_coalition(inst4, 4, 0, TieBreak::canonical(4)), BudgetExceeded);

    OracleBudget tiny;
    tiny.max_enumerations = 10;
    auto inst5 = gen_random(5, 1, 1, Side::Men, 4);
    CHECK_THROWS_AS(brute_single(inst5, 0, TieBreak::canonical(5), tiny), BudgetExceeded);
    CHECK_THROWS_AS(brute_coalition(inst5, 2, 0, TieBreak::canonical(5), tiny),
                    BudgetExceeded);

    std::vector<PreferenceOrder> side8(8, identity_order(8));
    CHECK_THROWS_AS(enumerate_stable(side8, side8), BudgetExceeded);

    CHECK_THROWS_AS(brute_coalition(inst4, -1, 0, TieBreak::canonical(4)),
                    std::invalid_argument);
}

TEST_CASE("coalition oracle with n=0 tests the honest outcome") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = gen_random(3, 2, 0, Side::Women, rng());
        auto tb = TieBreak::canonical(3);
        bool honest = team_match(inst, inst.team_order(tb)) == inst.target;
        auto w = brute_coalition(inst, 0, inst.target, tb);
        CHECK(w.has_value() == honest);
        if (w) CHECK(w->empty());
    }
}

TEST_CASE("coalition oracle with n=1 matches the single oracle") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 80; ++trial) {
        int k = 2 + static_cast<int>(rng() % 3);
        auto inst = gen_random(k, 2, 1, Side::Men, rng());
        auto tb = TieBreak::canonical(k);
        auto single = brute_single(inst, inst.target, tb);
        auto coal = brute_coalition(inst, 1, inst.target, tb);
        CHECK(single.has_value() == coal.has_value());
        if (coal) {
            REQUIRE(coal->size() == 1);
            CHECK(team_match(inst, inst.team_order(as_extras(*coal), tb)) == inst.target);
        }
    }
}

TEST_CASE("coalition oracle is monotone in the coalition size") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 60; ++trial) {
        int k = 2 + static_cast<int>(rng() % 3);
        auto inst = gen_random(k, 2, 1, Side::Women, rng());
        auto tb = TieBreak::canonical(k);
        if (brute_coalition(inst, 1, inst.target, tb))
            CHECK(brute_coalition(inst, 2, inst.target, tb).has_value());
    }
}

TEST_CASE("enumerate_stable contains the GS matching and only stable ones") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 120; ++trial) {
        int k = 2 + static_cast<int>(rng() % 4);
        auto inst = gen_random(k, 0, 0, Side::Men, rng());
        auto stable = enumerate_stable(inst.men, inst.women);
        REQUIRE(!stable.empty());
        auto gs = run_gs(inst.men, inst.women).man_to_woman;
        CHECK(std::find(stable.begin(), stable.end(), gs) != stable.end());
        for (const auto& mu : stable)
            CHECK(blocking_pairs(mu, inst.men, inst.women).empty());
    }
}

TEST_CASE("permutation sum: frozen small inputs") {
    auto a = solve_permutation_sum({3, 3});
    REQUIRE(a.has_value());
    CHECK(a->first[0] + a->second[0] == 3);
    CHECK(a->first[1] + a->second[1] == 3);

    CHECK_FALSE(solve_permutation_sum({1, 5}).has_value());

    auto c = solve_permutation_sum({2, 4});
    REQUIRE(c.has_value());
    CHECK(c->first == std::vector<int>{1, 2});
    CHECK(c->second == std::vector<int>{1, 2});

    auto d = solve_permutation_sum({2});
    REQUIRE(d.has_value());
    CHECK(d->first == std::vector<int>{1});
    CHECK(d->second == std::vector<int>{1});
}

TEST_CASE("permutation sum witnesses are valid permutations") {
    // All sorted X with entries in [1, 2q-1] summing to q(q+1), q=3.
    const int q = 3;
    for (int x1 = 1; x1 <= 2 * q - 1; ++x1)
        for (int x2 = x1; x2 <= 2 * q - 1; ++x2) {
            long long x3 = static_cast<long long>(q) * (q + 1) - x1 - x2;
            if (x3 < x2 || x3 > 2 * q - 1) continue;
            auto r = solve_permutation_sum({x1, x2, x3});
            if (!r) continue;
            auto check_perm = [&](const std::vector<int>& p) {
                std::vector<char> seen(q + 1, 0);
                for (int v : p) {
                    REQUIRE(v >= 1);
                    REQUIRE(v <= q);
                    CHECK(!seen[v]);
                    seen[v] = 1;
                }
            };
            check_perm(r->first);
            check_perm(r->second);
            std::vector<long long> X{x1, x2, x3};
            for (int i = 0; i < q; ++i) CHECK(r->first[i] + r->second[i] == X[i]);
        }
}

TEST_CASE("permutation sum rejects malformed inputs") {
    CHECK_THROWS_AS(solve_permutation_sum({5, 1}), std::invalid_argument);
    CHECK_THROWS_AS(solve_permutation_sum({2, 3}), std::invalid_argument);
}
