#include "ccap/roots.hpp"

#include <vector>

namespace ccap {

namespace {

// Sturm chain with coefficients kept integral and primitive. Each remainder is
// computed over Q and rescaled by a positive rational, which preserves the
// sign pattern the chain is evaluated for.
std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    chain.push_back(p.primitive_part());
    IntPoly d = p.derivative();
    if (!d.is_zero()) {
        chain.push_back(d.primitive_part());
        while (true) {
            const IntPoly& a = chain[chain.size() - 2];
            const IntPoly& b = chain.back();
            RatPoly rem = rat_mod(RatPoly(a), RatPoly(b));
            if (rem.is_zero()) break;
            chain.push_back(-(rem.to_int_primitive()));
        }
    }
    return chain;
}

int sign_changes_at(const std::vector<IntPoly>& chain, const Rational& x) {
    int changes = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// strips a factor x^k; positive roots are unaffected
IntPoly strip_zero_root(const IntPoly& p) {
    const auto& c = p.coeffs();
    size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;
    if (k == 0) return p;
    std::vector<BigInt> rest(c.begin() + k, c.end());
    return IntPoly(std::move(rest));
}

// squarefree part p / gcd(p, p')
IntPoly squarefree_part(const IntPoly& p) {
    IntPoly d = p.derivative();
    if (d.is_zero()) return p.primitive_part();
    IntPoly g = poly_gcd(p, d);
    if (g.degree() <= 0) return p.primitive_part();
    return exact_div(p, g).primitive_part();
}

// strict upper bound on the absolute value of every real root
Rational cauchy_bound(const IntPoly& p) {
    BigInt maxc(0);
    for (const auto& v : p.coeffs()) {
        BigInt a = abs(v);
        if (a > maxc) maxc = a;
    }
    BigInt lead = abs(p.leading());
    return Rational(1) + make_ratio(maxc, lead);
}

} // namespace

int count_roots_in(const IntPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw InputError("count_roots_in: zero polynomial");
    IntPoly sf = squarefree_part(p);
    if (sf.eval(a) == 0 || sf.eval(b) == 0)
        throw InputError("count_roots_in: endpoint is a root");
    auto chain = sturm_chain(sf);
    return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

RootIsolation smallest_positive_root(const IntPoly& p, const Rational& tol,
                                     std::optional<Rational> search_hint) {
    if (p.is_zero()) throw InputError("smallest_positive_root: zero polynomial");
    if (tol <= 0) throw InputError("smallest_positive_root: tolerance must be positive");

    IntPoly sf = squarefree_part(strip_zero_root(p));
    if (sf.degree() <= 0) return RootIsolation{};

    Rational bound = search_hint ? *search_hint : cauchy_bound(sf);
    if (bound <= 0) throw InputError("smallest_positive_root: search bound must be positive");

    // A probe that hits a root exactly either certifies it as the smallest or
    // lets us continue on the deflated polynomial, whose positive roots are
    // the remaining candidates below the probe.
    while (true) {
        if (sf.eval(bound) == 0) {
            Rational m = bound;
            BigInt num = m.get_num(), den = m.get_den();
            IntPoly linear(std::vector<BigInt>{-num, den}); // den*x - num
            IntPoly quot = exact_div(sf, linear);
            if (quot.degree() <= 0) return {RootStatus::found, {m, m}};
            auto qchain = sturm_chain(quot);
            int below = sign_changes_at(qchain, Rational(0)) - sign_changes_at(qchain, m);
            if (below == 0) return {RootStatus::found, {m, m}};
            sf = quot;
            bound = m; // smallest root is strictly inside (0, m)
            continue;
        }

        auto chain = sturm_chain(sf);
        const int v_zero = sign_changes_at(chain, Rational(0));
        int total = v_zero - sign_changes_at(chain, bound);
        if (total == 0) return RootIsolation{};

        Rational a(0), b = bound;
        int in_b = total; // roots in (0, b]
        bool deflated = false;
        while (!(a > 0 && in_b == 1 && b - a <= tol)) {
            Rational m = (a + b) / 2;
            if (sf.eval(m) == 0) {
                BigInt num = m.get_num(), den = m.get_den();
                IntPoly linear(std::vector<BigInt>{-num, den});
                IntPoly quot = exact_div(sf, linear);
                if (quot.degree() <= 0) return {RootStatus::found, {m, m}};
                auto qchain = sturm_chain(quot);
                int below = sign_changes_at(qchain, Rational(0)) - sign_changes_at(qchain, m);
                if (below == 0) return {RootStatus::found, {m, m}};
                sf = quot;
                bound = m;
                deflated = true;
                break;
            }
            int in_m = v_zero - sign_changes_at(chain, m);
            if (in_m == 0) {
                a = m;
            } else {
                b = m;
                in_b = in_m;
            }
        }
        if (deflated) continue;
        return {RootStatus::found, {a, b}};
    }
}

} // namespace ccap
