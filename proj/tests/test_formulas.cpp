#include "doctest.h"

#include "emk/constructions.hpp"
#include "emk/core.hpp"
#include "emk/formulas.hpp"

using namespace emk;

namespace {

// oracle: count canonical j-sets by enumeration over ([n] choose j)
Count lambda_enum(const Params& p, int j) {
    const Mask a_set = full_mask(p.a());
    long count = 0;
    for (Mask e : all_k_subsets(p.n(), j))
        if (popcount(e & a_set) >= p.m + 1 - j) ++count;
    return Count(count);
}

}  // namespace

TEST_CASE("lambda_layer equals enumeration on small ground sets") {
    for (int m = 1; m <= 4; ++m)
        for (int s = 1; s <= 5; ++s)
            for (int ell = 1; ell <= s; ++ell) {
                Params p(m, s, ell);
                if (p.n() > 12) continue;
                for (int j = 0; j <= m; ++j)
                    CHECK(lambda_layer(p, j) == lambda_enum(p, j));
            }
}

TEST_CASE("top layer identity Lambda_m = C(n,m) - C(r,m)") {
    for (int m = 1; m <= 6; ++m)
        for (long a = 0; a <= 12; ++a)
            for (long r = m; r <= 30; ++r)
                CHECK(lambda_layer(m, a, r, m) == binom(a + r, m) - binom(r, m));
}

TEST_CASE("p_size sums layers plus the upper tail") {
    Params p(3, 4, 3);  // n = 13
    CHECK(p_size(p) == lambda_total(p) + binom_tail(13, 4));
    // tiny cross-check against full enumeration
    Params q(2, 2, 2);  // n = 4
    CHECK(p_size(q) == Count(static_cast<long>(p_build(p_spec(q)).size())));
}

TEST_CASE("pprime_size pieces") {
    CHECK(a3_size(4, 3) == binom(8, 3));
    CHECK(pprime_size(4, 3) == binom(8, 3) + binom_tail(13, 4));
    CHECK_THROWS_AS(a3_size(4, 5), std::domain_error);
}

TEST_CASE("endpoint cubic: dual evaluation and spot values") {
    for (int s = 1; s <= 60; ++s)
        for (int ell = 1; ell <= s; ++ell) {
            Params p(3, s, ell);
            SignedCount direct = SignedCount(lambda_total(p)) - a3_size(s, ell);
            CHECK(lambda_minus_a3(s, ell) == direct);
        }
    CHECK(lambda_minus_a3(100, 2) == 78596);
    for (int s = 1; s <= 100; ++s) CHECK(lambda_minus_a3(s, 1) == 0);
}

TEST_CASE("threshold surd t(s)") {
    QuadraticSurd t2 = t_threshold(2);
    CHECK(t2.is_integer());
    CHECK(t2.floor_value() == 2);
    QuadraticSurd t100 = t_threshold(100);
    CHECK(t100.floor_value() == 89);
    CHECK_FALSE(t100.is_integer());
    CHECK(t100.compare(SignedCount(89)) > 0);
    CHECK(t100.compare(SignedCount(90)) < 0);
    CHECK(t2.compare(SignedCount(2)) == 0);
    CHECK_THROWS_AS(t_threshold(1), std::domain_error);
}

TEST_CASE("sign of the endpoint cubic follows t(s)") {
    for (int s = 2; s <= 80; ++s) {
        QuadraticSurd t = t_threshold(s);
        for (int ell = 2; ell <= s; ++ell) {
            SignedCount v = lambda_minus_a3(s, ell);
            int cmp = t.compare(SignedCount(ell));
            if (cmp > 0) CHECK(v > 0);   // l < t(s)
            if (cmp == 0) CHECK(v == 0); // l = t(s)
            if (cmp < 0) CHECK(v < 0);   // l > t(s)
        }
    }
}

TEST_CASE("h_k closed form") {
    CHECK(h_k(10, 2, 3) == binom(10, 3) - binom(8, 3) + 1 - binom(5, 2));
    CHECK_THROWS_AS(h_k(4, 3, 3), std::domain_error);
}

TEST_CASE("d_h values for m = 3") {
    for (long r = 4; r <= 100; ++r) {
        CHECK(d_h(r, 3, 1) == binom(r - 1, 2));
        CHECK(d_h(r, 3, 2) == Count(r - 2) * (r - 2));
        CHECK(d_h(r, 3, 3) == Count(r) * r);
        CHECK(2 * d_h(r, 3, 4) == Count(3) * r * r - 3 * r + 2);
        // the m=3 closed forms are exactly the generic binomial differences
        CHECK(d_h(r, 3, 1) == binom(r, 3) - binom(r - 1, 3));
        CHECK(d_h(r, 3, 2) == binom(r, 3) - binom(r - 2, 3));
    }
    CHECK_THROWS_AS(d_h(10, 3, 0), std::domain_error);
    CHECK_THROWS_AS(d_h(10, 3, 5), std::domain_error);
}

TEST_CASE("n_h closed forms and endpoint gaps") {
    for (long a = 1; a <= 50; ++a) {
        const long r = 2 * a + 7;
        CHECK(SignedCount(d_h(r, 3, 1)) - n_h_closed(a, r, 1) == 4 * a + 15);
        CHECK(SignedCount(d_h(r, 3, 2)) - n_h_closed(a, r, 2) == 4);
        CHECK(SignedCount(d_h(r, 3, 3)) - n_h_closed(a, r, 3) == 7 * a + 28);
        CHECK(SignedCount(d_h(r, 3, 4)) - n_h_closed(a, r, 4) ==
              2 * a * a + 16 * a + 36);
    }
}

TEST_CASE("D_h strictly increasing in h") {
    for (long r = 4; r <= 500; ++r)
        for (int h = 1; h < 4; ++h) CHECK(d_h(r, 3, h) < d_h(r, 3, h + 1));
}

TEST_CASE("blocker bound") {
    CHECK(blocker_bound(2, 2, 0) == 3);  // ceil(C(4,2)/2) = 3 beats C(2,2)
    CHECK(blocker_bound(3, 1, 5) == binom(8, 3));
    CHECK(blocker_bound(1, 4, 2) == 3);
    CHECK_THROWS_AS(blocker_bound(0, 1, 0), std::domain_error);
}

TEST_CASE("coefficient gap for all m up to 64") {
    for (int m = 3; m <= 64; ++m) CHECK(coefficient_gap(m));
    CHECK_THROWS_AS(coefficient_gap(2), std::domain_error);
}

TEST_CASE("phi positive on the rational grid") {
    for (int m : {3, 4, 5, 6}) {
        // theta_m = (m+1)/(2m+1); grid over [0, theta_m - 1/100]
        Rational top = Rational(m + 1) / (2 * m + 1) - Rational(1, 100);
        for (int i = 0; i <= 100; ++i) {
            Rational alpha = top * i / 100;
            alpha.canonicalize();
            CHECK(phi(m, alpha) > 0);
        }
    }
}

TEST_CASE("appendix identity spot values") {
    IdentityPair good = appendix_identity(AppendixIdentity::GoodEmc, 10, 4);
    CHECK(good.lhs == 1141);
    CHECK(good.rhs == 1141);
    CHECK(good.holds());

    IdentityPair gap = appendix_identity(AppendixIdentity::H3Gap, 10, 6);
    CHECK(gap.lhs == 128);  // the gap itself is 64; both sides carry the 2x
    CHECK(gap.holds());
}

TEST_CASE("appendix identities hold on a grid beyond their degrees") {
    for (long s = 10; s <= 40; ++s) {
        for (long p = 2; p <= s; ++p)
            CHECK(appendix_identity(AppendixIdentity::GoodEmc, s, p).holds());
        for (long ell = 1; ell <= s; ++ell)
            CHECK(appendix_identity(AppendixIdentity::H3Gap, s, ell).holds());
        for (long ell = 4; ell <= s; ++ell) {
            CHECK(appendix_identity(AppendixIdentity::Case2H3_1, s, ell).holds());
            CHECK(appendix_identity(AppendixIdentity::Case2H3_2, s, ell).holds());
            CHECK(appendix_identity(AppendixIdentity::Case2Clique1, s, ell).holds());
            CHECK(appendix_identity(AppendixIdentity::Case2Clique2, s, ell).holds());
        }
    }
}

TEST_CASE("quadratic part of the h3 gap factors as (s-l)(9s-5l)") {
    for (long s = 1; s <= 40; ++s)
        for (long ell = 1; ell <= 40; ++ell) {
            SignedCount quad = 9 * SignedCount(s) * s - 14 * ell * s + 5 * ell * ell;
            CHECK(quad == SignedCount(s - ell) * (9 * s - 5 * ell));
        }
}

TEST_CASE("identity selector names round trip") {
    for (auto which :
         {AppendixIdentity::GoodEmc, AppendixIdentity::H3Gap,
          AppendixIdentity::Case2H3_1, AppendixIdentity::Case2H3_2,
          AppendixIdentity::Case2Clique1, AppendixIdentity::Case2Clique2})
        CHECK(appendix_identity_from_name(appendix_identity_name(which)) == which);
    CHECK_THROWS(appendix_identity_from_name("nope"));
}

TEST_CASE("l12 bound formula") {
    // L12 = (s-1) + (s-1)(2n-s)/2 at n = 4s-l
    CHECK(l12_bound(10, 6) == Count(9) + Count(9) * (2 * 34 - 10) / 2);
}
