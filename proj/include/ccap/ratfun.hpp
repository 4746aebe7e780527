#pragma once

#include "ccap/poly.hpp"

namespace ccap {

// Rational function T(x)/S(x) in canonical form:
//   - gcd(num, den) is constant,
//   - the combined integer content of num and den is 1,
//   - the lowest-order nonzero coefficient of den is positive,
//   - den != 0.
// Canonical form is unique, so equality is coefficient equality.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(IntPoly::one()) {}
    RationalFunction(IntPoly num, IntPoly den); // canonicalizes

    static RationalFunction from_poly(IntPoly p) {
        return RationalFunction(std::move(p), IntPoly::one());
    }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // value at x=0; throws InternalError if den(0) == 0
    Rational at_zero() const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    IntPoly num_, den_;
};

// Clears denominators of num/den to integer polynomials and returns the
// canonical form. Throws InputError when den is zero.
RationalFunction ratfun_canonicalize(const RatPoly& num, const RatPoly& den);

} // namespace ccap
