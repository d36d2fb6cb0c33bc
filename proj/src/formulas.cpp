#include "emk/formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace emk {

namespace {

SignedCount exact_div(const SignedCount& num, long den) {
    SignedCount q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                SignedCount(den).get_mpz_t());
    if (r != 0) throw std::logic_error("exact_div: not divisible");
    return q;
}

Count pow_z(long base, long exp) {
    Count out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

Rational pow_q(const Rational& base, long exp) {
    Rational out(1);
    for (long i = 0; i < exp; ++i) out *= base;
    return out;
}

Count factorial(long k) {
    Count out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

}  // namespace

Count lambda_layer(int m, long a, long r, int j) {
    if (j < 0 || j > m) throw std::domain_error("lambda_layer: j out of 0..m");
    Count acc(0);
    for (int u = std::max(m + 1 - j, 0); u <= j; ++u)
        acc += binom(a, u) * binom(r, j - u);
    return acc;
}

Count lambda_layer(const Params& p, int j) {
    return lambda_layer(p.m, p.a(), p.r(), j);
}

Count lambda_total(const Params& p) {
    Count acc(0);
    for (int j = 0; j <= p.m; ++j) acc += lambda_layer(p, j);
    return acc;
}

Count p_size(const Params& p) {
    return lambda_total(p) + binom_tail(p.n(), p.m + 1);
}

Count a3_size(int s, int ell) {
    if (ell < 1 || ell > s) throw std::domain_error("a3_size: need 1 <= l <= s");
    return binom(3L * ell - 1, 3);
}

Count pprime_size(int s, int ell) {
    const long n = 4L * s - ell;
    return a3_size(s, ell) + binom_tail(n, 4);
}

SignedCount lambda_minus_a3(int s, int ell) {
    if (ell < 1 || ell > s)
        throw std::domain_error("lambda_minus_a3: need 1 <= l <= s");
    const SignedCount L(ell), S(s);
    SignedCount quad = -10 * L * L - 18 * S * L + 17 * L + 24 * S * S - 6 * S - 6;
    return exact_div((L - 1) * quad, 3);
}

SignedCount QuadraticSurd::floor_value() const {
    // value lies in [base + floor(sqrt(disc)), base + floor(sqrt(disc)) + 1)
    SignedCount num = base + isqrt(disc);
    SignedCount q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), SignedCount(denom).get_mpz_t());
    return q;
}

bool QuadraticSurd::is_integer() const {
    if (!is_perfect_square(disc)) return false;
    SignedCount num = base + isqrt(disc);
    return num % denom == 0;
}

int QuadraticSurd::compare(const SignedCount& x) const {
    // value - x has the sign of sqrt(disc) - (denom*x - base)
    SignedCount u = SignedCount(denom) * x - base;
    if (u < 0) return 1;
    SignedCount uu = u * u;
    if (disc > uu) return 1;
    if (disc == uu) return 0;
    return -1;
}

double QuadraticSurd::approx() const {
    return (base.get_d() + std::sqrt(disc.get_d())) / static_cast<double>(denom);
}

QuadraticSurd t_threshold(int s) {
    if (s < 2) throw std::domain_error("t_threshold: need s >= 2");
    const SignedCount S(s);
    QuadraticSurd t;
    t.base = 17 - 18 * S;
    t.disc = 1284 * S * S - 852 * S + 49;
    t.denom = 20;
    return t;
}

SignedCount h_k(long N, long u, int k) {
    if (N < u + k) throw std::domain_error("h_k: need N >= u+k");
    return binom(N, k) - binom(N - u, k) + 1 - binom(N - u - k, k - 1);
}

Count d_h(long r, int m, int h) {
    if (h < 1 || h > m + 1) throw std::domain_error("d_h: need 1 <= h <= m+1");
    if (r < m) throw std::domain_error("d_h: need r >= m");
    if (m == 3) {
        const Count R(r);
        switch (h) {
            case 1: return binom(r - 1, 2);
            case 2: return (R - 2) * (R - 2);
            case 3: return R * R;
            case 4: return exact_div(3 * R * R - 3 * R + 2, 2);
        }
    }
    return binom(r - m + 1 + h, m) - binom(r - m + 1, m);
}

Count n_h_closed(long a, long r, int h) {
    if (h < 1 || h > 4) throw std::domain_error("n_h_closed: need 1 <= h <= 4");
    Count acc = Count(a) * r;
    if (h >= 2) acc += binom(r, 2);
    if (h >= 3) acc += a;
    if (h >= 4) acc += r;
    return acc;
}

Count blocker_bound(int q, int t, int d) {
    if (q < 1 || t < 1 || d < 0)
        throw std::domain_error("blocker_bound: need q,t >= 1, d >= 0");
    const long N = static_cast<long>(q) * t + d;
    Count b1;
    mpz_cdiv_q(b1.get_mpz_t(), binom(N, q).get_mpz_t(), Count(t).get_mpz_t());
    Count b2 = binom(d + q, q);
    return b1 > b2 ? b1 : b2;
}

Rational phi(int m, const Rational& alpha) {
    if (m < 3) throw std::domain_error("phi: need m >= 3");
    Rational t1 = pow_q(Rational(m + 1) - 2 * alpha, m - 1) / factorial(m - 1);
    Rational t2 = alpha / 2 * pow_q(Rational(m + 1) - alpha, m - 2) / factorial(m - 2);
    Rational out = t1 - t2;
    out.canonicalize();
    return out;
}

bool coefficient_gap(int m) {
    if (m < 3) throw std::domain_error("coefficient_gap: need m >= 3");
    Count lhs = pow_z(2L * m - 1, m - 1);
    Count rhs = Count(m - 1) * pow_z(2, m - 3) * pow_z(m, m - 2);
    return lhs > rhs;
}

SignedCount r_poly(long p, long s) {
    const SignedCount P(p), S(s);
    return 48 * S * S - 36 * S * P - 20 * P * P + 67 * P - 108 * S + 54;
}

Count l12_bound(long s, long ell) {
    const long n = 4 * s - ell;
    return Count(s - 1) + exact_div(Count(s - 1) * (2 * n - s), 2);
}

AppendixIdentity appendix_identity_from_name(const std::string& name) {
    if (name == "good-emc") return AppendixIdentity::GoodEmc;
    if (name == "h3-gap") return AppendixIdentity::H3Gap;
    if (name == "case2-h3-1") return AppendixIdentity::Case2H3_1;
    if (name == "case2-h3-2") return AppendixIdentity::Case2H3_2;
    if (name == "case2-clique-1") return AppendixIdentity::Case2Clique1;
    if (name == "case2-clique-2") return AppendixIdentity::Case2Clique2;
    throw std::domain_error("unknown identity selector: " + name);
}

std::string appendix_identity_name(AppendixIdentity which) {
    switch (which) {
        case AppendixIdentity::GoodEmc: return "good-emc";
        case AppendixIdentity::H3Gap: return "h3-gap";
        case AppendixIdentity::Case2H3_1: return "case2-h3-1";
        case AppendixIdentity::Case2H3_2: return "case2-h3-2";
        case AppendixIdentity::Case2Clique1: return "case2-clique-1";
        case AppendixIdentity::Case2Clique2: return "case2-clique-2";
    }
    throw std::domain_error("unknown identity selector");
}

IdentityPair appendix_identity(AppendixIdentity which, long s, long second) {
    const SignedCount S(s);
    if (which == AppendixIdentity::GoodEmc) {
        const long p = second;
        const long N = 4 * s - p - 4;
        SignedCount lhs = binom(N, 3) - binom(N - p + 1, 3) - binom(3 * p - 1, 3);
        SignedCount rhs = exact_div(SignedCount(p - 1) * r_poly(p, s), 6);
        return {lhs, rhs};
    }
    const long ell = second;
    const long n = 4 * s - ell;
    const long a = ell - 1;
    const long r = n - a;
    const SignedCount L(ell);
    SignedCount lambda = binom(a, 2) + binom(n, 3) - binom(r, 3);
    SignedCount l12 = l12_bound(s, ell);
    switch (which) {
        case AppendixIdentity::H3Gap: {
            SignedCount lhs = 2 * (lambda - h_k(n, a, 3) - l12);
            SignedCount rhs =
                5 * L * L - 14 * L * S + 5 * L + 9 * S * S - 15 * S + 8;
            return {lhs, rhs};
        }
        case AppendixIdentity::Case2H3_1: {
            SignedCount li = binom(n, 3) - binom(n - 1, 3);
            SignedCount lhs = 2 * (lambda - li - h_k(n - 1, ell - 4, 3) - l12);
            SignedCount rhs =
                13 * L * L - 46 * L * S - 11 * L + 41 * S * S + 17 * S + 4;
            return {lhs, rhs};
        }
        case AppendixIdentity::Case2H3_2: {
            SignedCount li = binom(n, 3) - binom(n - 2, 3);
            SignedCount lhs = 2 * (lambda - li - h_k(n - 2, ell - 3, 3) - l12);
            SignedCount rhs =
                5 * L * L - 14 * L * S + 5 * L + 9 * S * S - 15 * S + 8;
            return {lhs, rhs};
        }
        case AppendixIdentity::Case2Clique1: {
            SignedCount li = binom(n, 3) - binom(n - 1, 3);
            SignedCount lhs = 6 * (lambda - li - binom(3 * ell - 10, 3) - l12);
            SignedCount rhs = -20 * L * L * L - 36 * L * L * S + 294 * L * L +
                              48 * L * S * S + 54 * L * S - 1114 * L -
                              117 * S * S + 63 * S + 1326;
            return {lhs, rhs};
        }
        case AppendixIdentity::Case2Clique2: {
            SignedCount li = binom(n, 3) - binom(n - 2, 3);
            SignedCount lhs = 6 * (lambda - li - binom(3 * ell - 7, 3) - l12);
            SignedCount rhs = -20 * L * L * L - 36 * L * L * S + 210 * L * L +
                              48 * L * S * S + 78 * L * S - 616 * L -
                              165 * S * S + 123 * S + 492;
            return {lhs, rhs};
        }
        default:
            throw std::domain_error("unknown identity selector");
    }
}

}  // namespace emk
