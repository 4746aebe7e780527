#include "ccap/poly.hpp"

#include <sstream>

namespace ccap {

IntPoly IntPoly::monomial(BigInt coeff, size_t k) {
    if (coeff == 0) return IntPoly();
    std::vector<BigInt> c(k + 1, BigInt(0));
    c[k] = std::move(coeff);
    return IntPoly(std::move(c));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<BigInt> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigInt(static_cast<long>(i));
    return IntPoly(std::move(d));
}

IntPoly IntPoly::shifted(size_t k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : IntPoly();
    std::vector<BigInt> d(c_.size() + k, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) d[i + k] = c_[i];
    return IntPoly(std::move(d));
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    if (g == 1) return *this;
    std::vector<BigInt> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        mpz_divexact(d[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    }
    return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<BigInt> r(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = -a.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const BigInt& s) {
    if (s == 0) return IntPoly();
    std::vector<BigInt> r(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
    return IntPoly(std::move(r));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InputError("exact_div: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw InternalError("exact_div: nonzero remainder");
    std::vector<BigInt> rem(a.coeffs());
    std::vector<BigInt> quot(a.degree() - b.degree() + 1, BigInt(0));
    const BigInt& lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt& top = rem[k + b.degree()];
        if (top == 0) continue;
        BigInt q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw InternalError("exact_div: leading coefficient does not divide");
        quot[k] = q;
        for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * b.coeff(i);
    }
    for (const auto& v : rem) {
        if (v != 0) throw InternalError("exact_div: nonzero remainder");
    }
    return IntPoly(std::move(quot));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw InputError("poly_gcd: both arguments zero");
    auto normalize = [](IntPoly p) {
        if (p.leading() < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);

    BigInt cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());

    // primitive remainder sequence on the primitive parts
    IntPoly p = a.primitive_part();
    IntPoly q = b.primitive_part();
    if (p.degree() < q.degree()) std::swap(p, q);
    while (!q.is_zero()) {
        RatPoly rem = rat_mod(RatPoly(p), RatPoly(q));
        p = q;
        q = rem.to_int_primitive();
    }
    return normalize(p.primitive_part() * cont);
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        BigInt v = c_[i];
        if (first) {
            if (v < 0) out << "-";
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        BigInt av = abs(v);
        if (i == 0 || av != 1) out << av.get_str();
        if (i >= 1) {
            out << "x";
            if (i >= 2) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly RatPoly::to_int_primitive() const {
    if (is_zero()) return IntPoly();
    BigInt den_lcm(1);
    for (const auto& v : c_) {
        BigInt d = v.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<BigInt> ints(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        Rational scaled = c_[i] * Rational(den_lcm);
        ints[i] = scaled.get_num(); // denominator is 1 after scaling
    }
    return IntPoly(std::move(ints)).primitive_part();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& a, const Rational& s) {
    if (s == 0) return RatPoly();
    std::vector<Rational> r(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
    return RatPoly(std::move(r));
}

RatPoly rat_mod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw InputError("rat_mod: division by zero polynomial");
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    const Rational lead = b.leading();
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        if (rem[k] == 0) continue;
        Rational q = rem[k] / lead;
        for (int i = 0; i <= db; ++i) rem[k - db + i] -= q * b.coeff(i);
        rem[k] = 0;
    }
    rem.resize(std::min<size_t>(rem.size(), db > 0 ? static_cast<size_t>(db) : 0));
    return RatPoly(std::move(rem));
}

} // namespace ccap
