#include "ccap/ratfun.hpp"

#include <sstream>

namespace ccap {

namespace {

// index of the lowest-order nonzero coefficient
int lowest_nonzero(const IntPoly& p) {
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) return static_cast<int>(i);
    }
    return -1;
}

} // namespace

RationalFunction::RationalFunction(IntPoly num, IntPoly den) {
    if (den.is_zero()) throw InputError("RationalFunction: zero denominator");
    if (num.is_zero()) {
        num_ = IntPoly();
        den_ = IntPoly::one();
        return;
    }
    IntPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    BigInt cont;
    mpz_gcd(cont.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
    if (cont > 1) {
        std::vector<BigInt> cn(num.coeffs()), cd(den.coeffs());
        for (auto& v : cn) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), cont.get_mpz_t());
        for (auto& v : cd) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), cont.get_mpz_t());
        num = IntPoly(std::move(cn));
        den = IntPoly(std::move(cd));
    }
    int low = lowest_nonzero(den);
    if (den.coeff(low) < 0) {
        num = -num;
        den = -den;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

Rational RationalFunction::at_zero() const {
    if (den_.coeff(0) == 0) throw InternalError("RationalFunction: pole at x=0");
    return make_ratio(num_.coeff(0), den_.coeff(0));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw InputError("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::str() const {
    std::ostringstream out;
    out << "(" << num_.str() << ") / (" << den_.str() << ")";
    return out.str();
}

RationalFunction ratfun_canonicalize(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw InputError("ratfun_canonicalize: zero denominator");
    // clear denominators separately; the integer-level canonicalization fixes
    // the relative scale
    BigInt num_lcm(1), den_lcm(1);
    for (const auto& v : num.coeffs()) {
        BigInt d = v.get_den();
        mpz_lcm(num_lcm.get_mpz_t(), num_lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& v : den.coeffs()) {
        BigInt d = v.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    BigInt scale = num_lcm * den_lcm;
    auto to_int = [&scale](const RatPoly& p) {
        std::vector<BigInt> c(p.coeffs().size());
        for (size_t i = 0; i < c.size(); ++i) {
            Rational v = p.coeff(i) * Rational(scale);
            c[i] = v.get_num();
        }
        return IntPoly(std::move(c));
    };
    return RationalFunction(to_int(num), to_int(den));
}

} // namespace ccap
