#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "ccap/errors.hpp"

namespace ccap {

// Arbitrary-precision integers and rationals. All exact arithmetic in the
// library runs on these; doubles appear only when presenting results.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("make_ratio: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt floor_quotient(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt rational_floor(const Rational& r) {
    return floor_quotient(r.get_num(), r.get_den());
}

inline int sign_of(const Rational& r) { return sgn(r); }
inline int sign_of(const BigInt& z) { return sgn(z); }

// Base-2 logarithm of a positive integer, good to double precision even when
// the value itself is far beyond double range.
inline double log2_of(const BigInt& n) {
    if (n <= 0) throw InputError("log2_of: nonpositive argument");
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp2);
}

} // namespace ccap
