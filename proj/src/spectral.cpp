#include "ccap/spectral.hpp"

#include <algorithm>
#include <map>

namespace ccap {

int DeBruijnGraph::a(size_t i, size_t j) const {
    const auto& row = out[i];
    return std::binary_search(row.begin(), row.end(), static_cast<uint32_t>(j)) ? 1 : 0;
}

bool DeBruijnGraph::has_cycle() const {
    // iterative three-color depth-first search
    enum : uint8_t { white, gray, black };
    std::vector<uint8_t> color(m(), white);
    std::vector<std::pair<uint32_t, size_t>> stack;
    for (uint32_t s = 0; s < m(); ++s) {
        if (color[s] != white) continue;
        color[s] = gray;
        stack.emplace_back(s, 0);
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < out[v].size()) {
                uint32_t w = out[v][idx++];
                if (color[w] == gray) return true;
                if (color[w] == white) {
                    color[w] = gray;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = black;
                stack.pop_back();
            }
        }
    }
    return false;
}

DeBruijnGraph build_debruijn(const ForbiddenSet& f, size_t max_vertices) {
    if (f.empty()) throw InputError("build_debruijn: empty set has no defined ell");
    if (!f.is_reduced()) throw ValidationError("build_debruijn: set is not reduced");
    const int ell = f.ell();
    const int q = f.q();

    DeBruijnGraph g;
    g.q = q;
    g.ell = ell;

    // free words of length ell, in lexicographic order straight from the
    // depth-first enumeration
    {
        std::vector<uint32_t> buf(ell, 0);
        auto blocked = [&](int depth) {
            for (const auto& w : f.words()) {
                const int len = static_cast<int>(w.size());
                if (len > depth) continue;
                if (std::equal(w.begin(), w.end(), buf.begin() + (depth - len))) return true;
            }
            return false;
        };
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == ell) {
                if (g.vertices.size() >= max_vertices)
                    throw ResourceError("build_debruijn: vertex budget exceeded");
                g.vertices.emplace_back(buf.begin(), buf.end());
                return;
            }
            for (uint32_t c = 0; c < static_cast<uint32_t>(q); ++c) {
                buf[depth] = c;
                if (!blocked(depth + 1)) self(self, depth + 1);
            }
        };
        rec(rec, 0);
    }

    // edge rule: u -> v iff u without its first symbol equals v without its
    // last symbol; group vertices by their (ell-1)-prefix
    std::map<Word, std::vector<uint32_t>> by_prefix;
    for (uint32_t i = 0; i < g.vertices.size(); ++i) {
        by_prefix[Word(g.vertices[i].begin(), g.vertices[i].end() - 1)].push_back(i);
    }
    g.out.resize(g.vertices.size());
    for (uint32_t i = 0; i < g.vertices.size(); ++i) {
        Word suffix(g.vertices[i].begin() + 1, g.vertices[i].end());
        auto it = by_prefix.find(suffix);
        if (it != by_prefix.end()) g.out[i] = it->second; // already sorted
    }
    return g;
}

BigInt walk_count(const DeBruijnGraph& g, long n) {
    if (n < g.ell) throw InputError("walk_count: n must be at least ell");
    std::vector<BigInt> v(g.m(), BigInt(1));
    for (long step = 0; step < n - g.ell; ++step) {
        std::vector<BigInt> next(g.m(), BigInt(0));
        for (size_t i = 0; i < g.m(); ++i) {
            for (uint32_t j : g.out[i]) next[i] += v[j];
        }
        v.swap(next);
    }
    BigInt total(0);
    for (const auto& x : v) total += x;
    return total;
}

GraphDets det_poly(const DeBruijnGraph& g, size_t max_vertices) {
    const size_t m = g.m();
    if (m == 0) throw InputError("det_poly: graph has no vertices");
    if (m > max_vertices)
        throw ResourceError("det_poly: graph too large for exact determinants");

    PolyMatrix ixa(m), ixaj(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            int aij = g.a(i, j);
            IntPoly e = (i == j) ? IntPoly::one() : IntPoly();
            if (aij) e = e - IntPoly{0, 1};
            ixa.at(i, j) = e;
            ixaj.at(i, j) = e - IntPoly::one();
        }
    }
    return GraphDets{bareiss_det(ixa), bareiss_det(ixaj)};
}

bool check_det_identity(const ForbiddenSet& f, const GenFun& fun, size_t max_vertices) {
    DeBruijnGraph g = build_debruijn(f);
    const int ell = g.ell;

    IntPoly d1, d2;
    if (g.m() == 0) {
        // empty determinant convention: both are 1, and the identity reduces
        // to T/S being the finite series of the low-order counts
        d1 = IntPoly::one();
        d2 = IntPoly::one();
    } else {
        GraphDets dets = det_poly(g, max_vertices);
        d1 = std::move(dets.det_shift);
        d2 = std::move(dets.det_shift_all);
    }

    std::vector<BigInt> low = brute_force_range(f, ell - 1);
    std::vector<BigInt> hc(ell + 1, BigInt(0));
    for (int i = 0; i < ell; ++i) hc[i] = low[i];
    hc[ell] = 1;
    IntPoly h(std::move(hc));

    // T/S == h - x^ell * d2/d1, cross-multiplied
    IntPoly lhs = fun.T * d1;
    IntPoly rhs = (h * d1 - d2.shifted(ell)) * fun.S;
    return lhs == rhs;
}

bool is_degenerate(const ForbiddenSet& f, size_t max_vertices) {
    DeBruijnGraph g = build_debruijn(f, max_vertices);
    if (g.m() == 0) return true;
    return !g.has_cycle();
}

SpectralEstimate spectral_radius(const DeBruijnGraph& g, const Rational& tol,
                                 size_t max_vertices) {
    if (tol <= 0) throw InputError("spectral_radius: tolerance must be positive");
    if (g.m() == 0 || !g.has_cycle()) return SpectralEstimate{};

    GraphDets dets = det_poly(g, max_vertices);
    // lambda = 1/x0; a cycle guarantees lambda >= 1, so x0 <= 1 and the
    // interval [1/hi, 1/lo] shrinks by about x0^-2 <= q^2 per unit of root
    // tolerance
    Rational root_tol = tol / (g.q * g.q);
    while (true) {
        RootIsolation iso = smallest_positive_root(dets.det_shift, root_tol);
        if (iso.status != RootStatus::found)
            throw InternalError("spectral_radius: det(I - xA) has no positive root");
        SpectralEstimate est;
        est.status = SpectralStatus::ok;
        est.lo = Rational(1) / iso.interval.hi;
        est.hi = Rational(1) / iso.interval.lo;
        if (est.hi - est.lo <= tol) return est;
        root_tol /= 4;
    }
}

} // namespace ccap
