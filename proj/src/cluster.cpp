#include "ccap/cluster.hpp"

#include <algorithm>

namespace ccap {

std::vector<Word> overlap_set(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw InputError("overlap_set: words must be nonempty");
    std::vector<Word> out;
    size_t max_len = std::min(u.size(), v.size()) - 1;
    for (size_t len = 1; len <= max_len; ++len) {
        if (std::equal(u.end() - len, u.end(), v.begin())) {
            out.emplace_back(v.begin(), v.begin() + len);
        }
    }
    return out;
}

IntPoly correlation_poly(const Word& u, const Word& v) {
    IntPoly h;
    for (const auto& o : overlap_set(u, v)) {
        h = h + IntPoly::monomial(BigInt(1), v.size() - o.size());
    }
    return h;
}

ClusterSystem build_cluster_system(const ForbiddenSet& f) {
    if (f.empty()) throw InputError("build_cluster_system: empty set");
    if (!f.is_reduced()) throw ValidationError("build_cluster_system: set is not reduced");
    const auto& words = f.words();
    const size_t n = words.size();
    ClusterSystem sys;
    sys.order = words;
    sys.B.assign(n, std::vector<IntPoly>(n));
    sys.rhs.resize(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            IntPoly h = correlation_poly(words[i], words[j]);
            if (h.coeff(0) != 0) throw InternalError("cluster system: constant term in h");
            if (i == j) h = h + IntPoly::one();
            sys.B[i][j] = std::move(h);
        }
        sys.rhs[i] = IntPoly::monomial(BigInt(-1), words[i].size());
    }
    return sys;
}

GenFun GenFun::make_canonical(IntPoly Tin, IntPoly Sin, int q, int ellF, size_t set_size) {
    RationalFunction canon(std::move(Tin), std::move(Sin));
    GenFun g;
    g.T = canon.num();
    g.S = canon.den();
    g.q = q;
    g.ellF = ellF;
    if (g.S.coeff(0) <= 0) throw InternalError("GenFun: S(0) must be positive");
    if (g.T.coeff(0) != g.S.coeff(0)) throw InternalError("GenFun: T(0) != S(0)");
    // Cramer bound on both degrees; 1 covers the empty set where S = 1 - qx
    long limit = std::max<long>(1, static_cast<long>(set_size) * ellF);
    if (g.T.degree() > limit || g.S.degree() > limit)
        throw InternalError("GenFun: degree bound |F|*ell(F) violated");
    return g;
}

ClusterResult cluster_genfun(const ForbiddenSet& f) {
    const int q = f.q();
    // 1 - qx as a rational function
    RationalFunction one_minus_qx(IntPoly{1, -q}, IntPoly::one());

    if (f.empty()) {
        ClusterResult res;
        res.g = RationalFunction(); // zero
        res.f = GenFun::make_canonical(IntPoly::one(), IntPoly{1, -q}, q, 0, 0);
        return res;
    }

    ClusterSystem sys = build_cluster_system(f);
    const size_t n = sys.order.size();

    // The equations read: for each column word v_j,
    //   sum_i B[i][j] * g_i = rhs[j]
    // so the matrix to eliminate is B transposed.
    std::vector<std::vector<RationalFunction>> m(n, std::vector<RationalFunction>(n));
    std::vector<RationalFunction> rhs(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            m[i][j] = RationalFunction::from_poly(sys.B[j][i]);
        }
        rhs[i] = RationalFunction::from_poly(sys.rhs[i]);
    }

    // Forward elimination. Every pivot evaluates to 1 at x = 0 because the
    // off-diagonal entries have no constant term, so no pivot search is
    // needed; a vanishing pivot would contradict det(B) != 0.
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k].is_zero()) throw InternalError("cluster_genfun: singular system");
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            RationalFunction factor = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) {
                m[i][j] = m[i][j] - factor * m[k][j];
            }
            rhs[i] = rhs[i] - factor * rhs[k];
        }
    }
    std::vector<RationalFunction> sol(n);
    for (size_t k = n; k-- > 0;) {
        RationalFunction acc = rhs[k];
        for (size_t j = k + 1; j < n; ++j) acc = acc - m[k][j] * sol[j];
        sol[k] = acc / m[k][k];
    }

    RationalFunction g;
    for (const auto& s : sol) g = g + s;

    RationalFunction denom = one_minus_qx - g;
    if (denom.is_zero()) throw InternalError("cluster_genfun: vanishing denominator");
    RationalFunction f_rat = RationalFunction::from_poly(IntPoly::one()) / denom;

    ClusterResult res;
    res.g = std::move(g);
    res.f = GenFun::make_canonical(f_rat.num(), f_rat.den(), q, f.ell(), f.size());
    return res;
}

} // namespace ccap
