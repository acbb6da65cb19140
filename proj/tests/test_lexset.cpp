#include <doctest.h>

#include <random>

#include "crossfam/lexset.hpp"
#include "oracles.hpp"

using namespace crossfam;

namespace {
KSet ks(int n, std::initializer_list<int> v) { return KSet(n, std::vector<int>(v)); }
}

TEST_CASE("compare_lex matches the order's defining rule") {
    CHECK(compare_lex(ks(9, {2, 4, 7}), ks(9, {2, 4, 9})) == Ordering::Before);
    CHECK(compare_lex(ks(4, {1, 2, 3}), ks(4, {1, 2})) == Ordering::Before);  // superset first
    CHECK(compare_lex(ks(4, {1, 3}), ks(4, {1, 2, 4})) == Ordering::After);
    CHECK(compare_lex(ks(5, {2, 4}), ks(5, {2, 4})) == Ordering::Equal);
    CHECK_THROWS_AS(compare_lex(ks(4, {1}), ks(5, {1})), std::invalid_argument);

    // full agreement with the direct min-rule on every pair of nonempty
    // subsets of [5]
    std::vector<std::vector<int>> subs;
    for (int k = 1; k <= 5; ++k)
        for (auto& s : oracle::ksets(5, k)) subs.push_back(s);
    for (const auto& a : subs)
        for (const auto& b : subs) {
            int expect = oracle::cmp(a, b);
            Ordering got = compare_lex(KSet(5, a), KSet(5, b));
            CHECK((expect < 0) == (got == Ordering::Before));
            CHECK((expect == 0) == (got == Ordering::Equal));
        }
}

TEST_CASE("rank: closed form equals enumeration") {
    CHECK(rank(4, 2, ks(4, {1, 2})) == 1);
    CHECK(rank(4, 2, ks(4, {3, 4})) == 6);
    CHECK(rank(4, 2, ks(4, {2, 3})) == 4);
    CHECK_THROWS_AS(rank(4, 2, ks(4, {1, 2, 3})), std::invalid_argument);

    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= std::min(n, 4); ++k)
            for (const auto& r : oracle::ksets(n, k))
                CHECK(rank(n, k, KSet(n, r)) == Count(oracle::rank(n, k, r)));
}

TEST_CASE("rank_general counts k-sets at or before an arbitrary set") {
    CHECK(rank_general(5, 2, ks(5, {2, 3, 4, 5})) == 4);
    // the count through an oversized set equals the rank of its 3-partner
    CHECK(rank_general(9, 3, ks(9, {1, 3, 5, 6, 7})) == rank(9, 3, ks(9, {1, 3, 4})));
    CHECK(rank_general(9, 3, ks(9, {1, 3, 5, 6, 7})) == 8);
    // initial segment with k < |H|: nothing precedes
    CHECK(rank_general(4, 2, ks(4, {1, 2, 3})) == 0);
    CHECK_THROWS_AS(rank_general(4, 2, KSet(4, {})), std::invalid_argument);

    for (int n = 2; n <= 8; ++n) {
        std::vector<std::vector<int>> subs;
        for (int sz = 1; sz <= n; ++sz)
            for (auto& s : oracle::ksets(n, sz)) subs.push_back(s);
        for (int k = 1; k <= std::min(n, 4); ++k)
            for (const auto& h : subs)
                CHECK(rank_general(n, k, KSet(n, h)) == Count(oracle::rank_general(n, k, h)));
    }
}

TEST_CASE("unrank inverts rank") {
    CHECK(unrank(4, 2, 1) == ks(4, {1, 2}));
    CHECK(unrank(4, 2, 6) == ks(4, {3, 4}));
    CHECK(unrank(4, 2, 4) == ks(4, {2, 3}));
    CHECK_THROWS_AS(unrank(4, 2, 7), std::invalid_argument);
    CHECK_THROWS_AS(unrank(4, 2, 0), std::invalid_argument);

    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            Count total = binom(n, k);
            for (Count r = 1; r <= total; ++r) CHECK(rank(n, k, unrank(n, k, r)) == r);
        }

    std::mt19937_64 rng(7);
    for (int it = 0; it < 2000; ++it) {
        int n = 2 + static_cast<int>(rng() % 29);
        int k = 1 + static_cast<int>(rng() % std::min(n, 10));
        Count total = binom(n, k);
        Count r = 1 + Count(rng()) % total;
        KSet set = unrank(n, k, r);
        CHECK(rank(n, k, set) == r);
        CHECK(unrank(n, k, rank(n, k, set)) == set);
    }
}

TEST_CASE("rank is monotone along compare_lex") {
    for (const auto& a : oracle::ksets(7, 3))
        for (const auto& b : oracle::ksets(7, 3)) {
            bool before = compare_lex(KSet(7, a), KSet(7, b)) == Ordering::Before;
            CHECK(before == (rank(7, 3, KSet(7, a)) < rank(7, 3, KSet(7, b))));
        }
}

TEST_CASE("step walks immediate neighbours") {
    CHECK(*step(4, 2, ks(4, {1, 4}), StepDir::Succ) == ks(4, {2, 3}));
    CHECK(!step(4, 2, ks(4, {1, 2}), StepDir::Pred));
    CHECK(*step(9, 4, ks(9, {1, 3, 4, 9}), StepDir::Succ) == ks(9, {1, 3, 5, 6}));
    CHECK(!step(5, 2, ks(5, {4, 5}), StepDir::Succ));

    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            auto all = oracle::ksets(n, k);
            for (size_t i = 0; i < all.size(); ++i) {
                KSet cur(n, all[i]);
                auto nxt = step(n, k, cur, StepDir::Succ);
                if (i + 1 < all.size()) {
                    REQUIRE(nxt.has_value());
                    CHECK(*nxt == KSet(n, all[i + 1]));
                    CHECK(*step(n, k, *nxt, StepDir::Pred) == cur);
                } else {
                    CHECK(!nxt);
                }
            }
        }
}

TEST_CASE("decompose splits tail run and core") {
    auto d = decompose(9, ks(9, {2, 4, 9}));
    CHECK(d.ell == 1);
    CHECK(d.tail == ks(9, {9}));
    CHECK(d.core == ks(9, {2, 4}));
    d = decompose(9, ks(9, {2, 4, 7}));
    CHECK(d.ell == 0);
    CHECK(d.tail.empty());
    CHECK(d.core == ks(9, {2, 4, 7}));
    d = decompose(6, ks(6, {4, 5, 6}));
    CHECK(d.ell == 3);
    CHECK(d.core.empty());

    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& f : oracle::ksets(n, k)) {
                auto dd = decompose(n, KSet(n, f));
                CHECK(dd.ell == oracle::ell(n, f));
                std::vector<int> merged = dd.core.elems;
                merged.insert(merged.end(), dd.tail.elems.begin(), dd.tail.elems.end());
                CHECK(merged == f);
                if (!dd.core.empty() && dd.ell > 0) CHECK(dd.core.max() < n - dd.ell);
            }
}

TEST_CASE("seq_step slides the top block") {
    CHECK(*seq_step(9, ks(9, {2, 3, 4}), 2) == ks(9, {2, 4, 5}));
    CHECK(*seq_step(4, ks(4, {1, 3}), 1) == ks(4, {1, 4}));
    CHECK(!seq_step(5, ks(5, {2, 4, 5}), 2));
    CHECK_THROWS_AS(seq_step(9, ks(9, {2, 4, 7}), 2), std::invalid_argument);
    CHECK_THROWS_AS(seq_step(9, ks(9, {2, 3, 4}), 4), std::invalid_argument);

    // the chain from A+{a+1..a+c} reaches A+{n-c+1..n} in n-a-c steps
    int n = 11, a = 4, c = 3;
    KSet cur(n, {1, 3, 5, 6, 7});  // A = {1,3}, block {5,6,7}
    int steps = 0;
    while (auto nxt = seq_step(n, cur, c)) {
        cur = *nxt;
        ++steps;
    }
    CHECK(steps == n - a - c);
    CHECK(cur == KSet(n, {1, 3, 9, 10, 11}));
}

TEST_CASE("members lists the family and honors the cap") {
    auto fam = members(4, 2, ks(4, {1, 3}), 10);
    REQUIRE(fam.size() == 2);
    CHECK(fam[0] == ks(4, {1, 2}));
    CHECK(fam[1] == ks(4, {1, 3}));
    CHECK(members(4, 2, ks(4, {1, 2}), 10).size() == 1);
    auto star = members(6, 2, ks(6, {1, 6}), 10);
    REQUIRE(star.size() == 5);
    CHECK(star.back() == ks(6, {1, 6}));
    CHECK_THROWS_AS(members(10, 5, ks(10, {6, 7, 8, 9, 10}), 100), size_guard_error);

    for (int k = 1; k <= 4; ++k)
        for (const auto& r : oracle::ksets(6, k))
            CHECK(Count(members(6, k, KSet(6, r)).size()) == rank(6, k, KSet(6, r)));
}

TEST_CASE("binom basics") {
    CHECK(binom(0, 0) == 1);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(4, 5) == 0);
    CHECK(binom(52, 26) == Count("495918532948104"));
}
