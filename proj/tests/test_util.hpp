#pragma once

#include <string>
#include <vector>

#include "ccap/cluster.hpp"
#include "ccap/words.hpp"

namespace testutil {

using namespace ccap;

inline Word w(const std::string& s) {
    Word out;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::runtime_error("bad test word");
        out.push_back(static_cast<uint32_t>(c - '0'));
    }
    return out;
}

inline ForbiddenSet fset(int q, const std::vector<std::string>& words) {
    std::vector<Word> ws;
    for (const auto& s : words) ws.push_back(w(s));
    return ForbiddenSet(Alphabet::make(q), std::move(ws));
}

// Taylor coefficients of a rational function with no pole at 0, over Q.
inline std::vector<Rational> series(const RationalFunction& r, int n_max) {
    const IntPoly& num = r.num();
    const IntPoly& den = r.den();
    if (den.coeff(0) == 0) throw std::runtime_error("series: pole at 0");
    std::vector<Rational> c(n_max + 1, Rational(0));
    Rational d0(den.coeff(0));
    for (int n = 0; n <= n_max; ++n) {
        Rational acc(num.coeff(n));
        for (int i = 1; i <= den.degree() && i <= n; ++i) {
            acc -= Rational(den.coeff(i)) * c[n - i];
        }
        c[n] = acc / d0;
    }
    return c;
}

// Direct cluster enumeration for tiny sets: walks over every string of each
// length and every chained interval marking, summing (-1)^t. Exponential, so
// strictly a small-case oracle; completely independent of the correlation
// polynomial algebra.
inline std::vector<long> enumerate_cluster_coeffs(const ForbiddenSet& f, int n_max) {
    std::vector<long> coeff(n_max + 1, 0);
    const int q = f.q();
    std::vector<uint32_t> buf;

    struct Occ {
        int i, j; // 1-based, inclusive
    };

    auto collect_occs = [&](int n) {
        std::vector<Occ> occs;
        for (const auto& fw : f.words()) {
            int len = static_cast<int>(fw.size());
            for (int i = 1; i + len - 1 <= n; ++i) {
                bool match = true;
                for (int k = 0; k < len; ++k) {
                    if (buf[i - 1 + k] != fw[k]) {
                        match = false;
                        break;
                    }
                }
                if (match) occs.push_back({i, i + len - 1});
            }
        }
        return occs;
    };

    auto count_clusters = [&](int n) {
        auto occs = collect_occs(n);
        long total = 0;
        // chains: first interval starts at 1; each next starts inside the
        // previous; the last must end at n
        auto extend = [&](auto&& self, const Occ& cur, int t) -> void {
            if (cur.j == n) total += (t % 2 == 0) ? 1 : -1;
            for (const auto& nxt : occs) {
                if (nxt.i > cur.i && nxt.i <= cur.j) self(self, nxt, t + 1);
            }
        };
        for (const auto& o : occs) {
            if (o.i == 1) extend(extend, o, 1);
        }
        return total;
    };

    auto walk = [&](auto&& self, int depth, int n) -> void {
        if (depth == n) {
            coeff[n] += count_clusters(n);
            return;
        }
        for (uint32_t c = 0; c < static_cast<uint32_t>(q); ++c) {
            buf[depth] = c;
            self(self, depth + 1, n);
        }
    };

    for (int n = 1; n <= n_max; ++n) {
        buf.assign(n, 0);
        walk(walk, 0, n);
    }
    return coeff;
}

// Definitional constraint-family predicates used to cross-check the generated
// forbidden sets.
inline bool rll_ok(const Word& u, int d, int k) {
    int n = static_cast<int>(u.size());
    int run = 0;
    int last_one = -1;
    for (int i = 0; i < n; ++i) {
        if (u[i] == 0) {
            if (++run > k) return false;
        } else {
            if (last_one >= 0 && i - last_one - 1 < d) return false;
            last_one = i;
            run = 0;
        }
    }
    return true;
}

inline bool lb_ok(const Word& u, int ell, int delta) {
    int n = static_cast<int>(u.size());
    for (int i = 0; i + ell <= n; ++i) {
        int wt = 0;
        for (int k = 0; k < ell; ++k) wt += (u[i + k] != 0);
        if (2 * wt > ell + 2 * delta || 2 * wt < ell - 2 * delta) return false;
    }
    return true;
}

inline bool pa_ok(const Word& u, int ell) {
    int n = static_cast<int>(u.size());
    for (int i = 0; i + ell <= n; ++i) {
        bool palin = true;
        for (int k = 0; k < ell / 2; ++k) {
            if (u[i + k] != u[i + ell - 1 - k]) {
                palin = false;
                break;
            }
        }
        if (palin) return false;
    }
    return true;
}

inline bool lpa_ok(const Word& u, int ell, int p) {
    int n = static_cast<int>(u.size());
    for (int i = 0; i + ell <= n; ++i) {
        for (int period = 1; period < p; ++period) {
            bool periodic = true;
            for (int k = 0; k + period < ell; ++k) {
                if (u[i + k] != u[i + k + period]) {
                    periodic = false;
                    break;
                }
            }
            if (periodic) return false;
        }
    }
    return true;
}

// counts strings of length n satisfying pred, by full enumeration
template <typename Pred>
long predicate_count(int q, int n, Pred&& pred) {
    Word u(n, 0);
    long total = 0;
    while (true) {
        if (pred(u)) ++total;
        int i = n - 1;
        while (i >= 0 && u[i] == static_cast<uint32_t>(q - 1)) {
            u[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++u[i];
    }
    return total;
}

} // namespace testutil
