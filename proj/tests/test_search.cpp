#include "doctest.h"

#include <random>

#include "emk/constructions.hpp"
#include "emk/formulas.hpp"
#include "emk/search.hpp"

using namespace emk;

TEST_CASE("tiny exact values") {
    CHECK(e_exact(3, 2).value == 4);
    CHECK(e_exact(4, 2).value == 8);
    for (int n = 1; n <= 5; ++n) CHECK(e_exact(n, 1).value == 0);
    CHECK(e_exact(2, 2).value == 2);
    CHECK(e_exact(3, 3).value == 6);  // everything except {} and one singleton? exhaustive value
}

TEST_CASE("witnesses re-verify") {
    for (auto [n, s] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{4, 3}}) {
        SearchResult res = e_exact(n, s);
        REQUIRE(!res.witnesses.empty());
        for (const SetFamily& w : res.witnesses) {
            CHECK(Count(static_cast<long>(w.size())) == res.value);
            CHECK(matching_number(w).nu < s);
        }
    }
}

TEST_CASE("canonical lower bounds from the constructions") {
    // n = (m+1)s - l compatible parameterizations must never beat e(n,s)
    for (int n = 2; n <= 5; ++n)
        for (int s = 1; s <= n; ++s) {
            Count e = e_exact(n, s).value;
            CHECK(e >= construction_lower_bound(n, s));
        }
    CHECK(e_exact(4, 2).value >= p_size(Params(2, 2, 2)));
    CHECK(e_exact(3, 2).value >= p_size(Params(1, 2, 1)));
}

TEST_CASE("extremal enumeration at (3,2) sees non-isomorphic optima") {
    auto witnesses = enumerate_extremal(3, 2);
    CHECK(witnesses.size() >= 2);
    for (const SetFamily& w : witnesses) {
        CHECK(w.size() == 4);
        CHECK(matching_number(w).nu < 2);
        CHECK(canonical_form(w) == w);
    }
    // representatives are pairwise distinct canonical forms
    for (std::size_t i = 1; i < witnesses.size(); ++i)
        CHECK(!(witnesses[i - 1] == witnesses[i]));
}

TEST_CASE("extremal enumeration at s=1 is the empty family") {
    auto witnesses = enumerate_extremal(4, 1);
    REQUIRE(witnesses.size() == 1);
    CHECK(witnesses[0].members.empty());
}

TEST_CASE("canonical form is a permutation invariant") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
        SetFamily f{5, {}};
        for (Mask m = 0; m < 32; ++m)
            if (rng() & 1) f.members.push_back(m);
        f.normalize();
        SetFamily canon = canonical_form(f);
        // relabel randomly and re-canonicalize
        std::vector<int> perm{0, 1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        SetFamily shuffled{5, {}};
        for (Mask m : f.members) {
            Mask img = 0;
            for (int i = 0; i < 5; ++i)
                if (m >> i & 1) img |= Mask(1) << perm[i];
            shuffled.members.push_back(img);
        }
        shuffled.normalize();
        CHECK(canonical_form(shuffled) == canon);
    }
}

TEST_CASE("exchange step keeps nu below s") {
    // replacing a member by a superset preserves the no-s-matching property
    std::mt19937 rng(31337);
    int tested = 0;
    while (tested < 200) {
        SetFamily f{5, {}};
        for (Mask m = 0; m < 32; ++m)
            if (rng() % 4 == 0) f.members.push_back(m);
        f.normalize();
        if (f.members.empty()) continue;
        const int s = 1 + rng() % 3;
        if (matching_number(f).nu >= s) continue;
        Mask a = f.members[rng() % f.members.size()];
        Mask extra = Mask(rng() % 32) | a;
        if (f.contains(extra)) continue;
        SetFamily g = f;
        g.members.erase(std::find(g.members.begin(), g.members.end(), a));
        g.members.push_back(extra);
        g.normalize();
        CHECK(g.size() == f.size());
        CHECK(matching_number(g).nu < s);
        ++tested;
    }
}

TEST_CASE("verify_extremal verdicts") {
    // point-star on [3]: the four sets through element 1
    SetFamily star{3, {0b001, 0b011, 0b101, 0b111}};
    ExtremalVerdict v1 = verify_extremal(star, 3, 2);
    CHECK(v1.verdict == Verdict::Optimal);
    REQUIRE(v1.optimum.has_value());
    CHECK(*v1.optimum == 4);

    ExtremalVerdict v2 = verify_extremal(power_set(3), 3, 2);
    CHECK(v2.verdict == Verdict::Infeasible);

    SetFamily small{3, {0b111}};
    ExtremalVerdict v3 = verify_extremal(small, 3, 2);
    CHECK(v3.verdict == Verdict::Suboptimal);

    SetFamily seven{7, {}};
    ExtremalVerdict v4 = verify_extremal(seven, 7, 7);
    CHECK((v4.verdict == Verdict::MeetsLowerBound ||
           v4.verdict == Verdict::BelowLowerBound));
}

TEST_CASE("search result json record") {
    SearchResult res = e_exact(3, 2);
    std::string j = search_result_to_json(res, {"w0.fam"});
    CHECK(j.find("\"value\":\"4\"") != std::string::npos);
    CHECK(j.find("w0.fam") != std::string::npos);
}

TEST_CASE("capacity refusal") {
    CHECK_THROWS_AS(e_exact(8, 2), CapacityError);
}
