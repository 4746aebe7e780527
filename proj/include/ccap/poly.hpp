#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ccap/bigint.hpp"

namespace ccap {

// Dense univariate polynomial over the integers. Coefficients are stored
// lowest degree first with no trailing zeros, so equal values compare equal
// with operator== on the coefficient vectors.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({1}); }
    static IntPoly constant(BigInt v) { return IntPoly(std::vector<BigInt>{std::move(v)}); }
    // x^k with the given coefficient
    static IntPoly monomial(BigInt coeff, size_t k);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

    BigInt eval(const BigInt& x) const;
    Rational eval(const Rational& x) const;

    IntPoly derivative() const;
    // multiply by x^k
    IntPoly shifted(size_t k) const;

    // gcd of absolute coefficient values; 0 for the zero polynomial
    BigInt content() const;
    // divided by content, sign of leading coefficient preserved
    IntPoly primitive_part() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const BigInt& s);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    std::string str() const; // human-readable, e.g. "1 - x - x^2"

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

// Quotient of a by b when b divides a exactly in Z[x]; throws InternalError on
// a nonzero remainder since every call site relies on an algebraic identity.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

// gcd in Z[x] (content times primitive gcd), normalized to a positive leading
// coefficient. Throws InputError when both arguments are zero.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Dense univariate polynomial over the rationals, same storage conventions.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit RatPoly(const IntPoly& p);

    static RatPoly zero() { return RatPoly(); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Rational eval(const Rational& x) const;

    // integer polynomial with the same roots and signs: multiply by the
    // lcm of denominators, then divide by the gcd of numerators
    IntPoly to_int_primitive() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const Rational& s);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    // polynomial remainder of a modulo b over Q, deg(rem) < deg(b)
    friend RatPoly rat_mod(const RatPoly& a, const RatPoly& b);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace ccap
