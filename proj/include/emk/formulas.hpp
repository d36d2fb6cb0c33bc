#pragma once

#include <string>

#include "emk/bigint.hpp"
#include "emk/core.hpp"

namespace emk {

/// Size of the j-th layer of the canonical family:
/// sum over u = m+1-j .. j of C(a,u) C(r,j-u).
Count lambda_layer(const Params& p, int j);

/// Same, for a free (a, r) split not tied to a parameter bundle.
Count lambda_layer(int m, long a, long r, int j);

/// Sum of lambda_layer over j = 0..m.
Count lambda_total(const Params& p);

/// |P(m,s,l)| = Lambda + sum_{i >= m+1} C(n,i).
Count p_size(const Params& p);

/// A_3 = C(3l-1, 3).
Count a3_size(int s, int ell);

/// |P'(s,l)| = A_3 + sum_{i >= 4} C(n,i) with n = 4s-l.
Count pprime_size(int s, int ell);

/// The factored cubic (l-1)(-10l^2 - 18sl + 17l + 24s^2 - 6s - 6)/3,
/// equal to p_size(3,s,l) - pprime_size(s,l).
SignedCount lambda_minus_a3(int s, int ell);

/// Exact quadratic surd (base + sqrt(disc)) / denom with disc >= 0.
struct QuadraticSurd {
    SignedCount base;
    Count disc;
    long denom;

    SignedCount floor_value() const;
    bool is_integer() const;
    /// Sign of (value - x): -1, 0 or +1.
    int compare(const SignedCount& x) const;
    double approx() const;
};

/// t(s) = (17 - 18s + sqrt(49 - 852s + 1284s^2)) / 20, s >= 2.
QuadraticSurd t_threshold(int s);

/// h_k(N,u) = C(N,k) - C(N-u,k) + 1 - C(N-u-k,k-1); requires N >= u+k.
SignedCount h_k(long N, long u, int k);

/// Required extra-missing-set count for shortage h.  For m = 3 this is the
/// sharpened sequence D_1 = C(r-1,2), D_2 = (r-2)^2, D_3 = r^2,
/// D_4 = (3r^2-3r+2)/2; for other m the generic
/// C(r-m+1+h, m) - C(r-m+1, m).
Count d_h(long r, int m, int h);

/// m = 3 closed forms N_1 = ar, N_2 = ar + C(r,2), N_3 = N_2 + a,
/// N_4 = N_3 + r.
Count n_h_closed(long a, long r, int h);

/// max{ ceil(C(qt+d,q)/t), C(d+q,q) }.
Count blocker_bound(int q, int t, int d);

/// Phi(alpha) = (m+1-2a)^{m-1}/(m-1)! - (a/2)(m+1-a)^{m-2}/(m-2)!.
Rational phi(int m, const Rational& alpha);

/// Truth of (2m-1)^{m-1} > (m-1) 2^{m-3} m^{m-2} by exact comparison.
bool coefficient_gap(int m);

/// R(p,s) = 48s^2 - 36sp - 20p^2 + 67p - 108s + 54.
SignedCount r_poly(long p, long s);

enum class AppendixIdentity {
    GoodEmc,      // C(N,3)-C(N-p+1,3)-C(3p-1,3) = (p-1)R(p,s)/6, N = 4s-p-4
    H3Gap,        // 2(Lambda - h_3(n,a) - L12) = 5l^2-14ls+5l+9s^2-15s+8
    Case2H3_1,    // 2(Lambda - L_1 - h_3(n-1,l-4) - L12) = 13l^2-46ls-11l+41s^2+17s+4
    Case2H3_2,    // 2(Lambda - L_2 - h_3(n-2,l-3) - L12) = 5l^2-14ls+5l+9s^2-15s+8
    Case2Clique1, // 6(Lambda - L_1 - C(3l-10,3) - L12) = cubic below
    Case2Clique2, // 6(Lambda - L_2 - C(3l-7,3) - L12) = cubic below
};

AppendixIdentity appendix_identity_from_name(const std::string& name);
std::string appendix_identity_name(AppendixIdentity which);

struct IdentityPair {
    SignedCount lhs;  // combinatorial side (binomials), scaled to clear denominators
    SignedCount rhs;  // expanded polynomial side
    bool holds() const { return lhs == rhs; }
};

/// Evaluates both sides of the selected identity independently.
/// `second` is p for GoodEmc and l for the others.
IdentityPair appendix_identity(AppendixIdentity which, long s, long second);

/// L12 = (s-1) + (s-1)(2n-s)/2 with n = 4s-l.
Count l12_bound(long s, long ell);

}  // namespace emk
