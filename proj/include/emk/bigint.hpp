#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace emk {

/// Arbitrary-precision nonnegative integer used for all formula outputs.
using Count = mpz_class;

/// Arbitrary-precision signed integer.
using SignedCount = mpz_class;

/// Exact rational.
using Rational = mpq_class;

/// Binomial coefficient with the zero convention: out-of-range
/// coefficients (k < 0, k > n, or n < 0) evaluate to zero.
inline Count binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Count(0);
    Count out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

/// Sum of binom(n, i) for i = from..n.
inline Count binom_tail(long n, long from) {
    Count acc(0);
    if (from < 0) from = 0;
    for (long i = from; i <= n; ++i) acc += binom(n, i);
    return acc;
}

/// Floor of sqrt(x), x >= 0.
inline Count isqrt(const Count& x) {
    Count out;
    mpz_sqrt(out.get_mpz_t(), x.get_mpz_t());
    return out;
}

inline bool is_perfect_square(const Count& x) {
    return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline std::string to_decimal(const Count& x) { return x.get_str(); }

}  // namespace emk
