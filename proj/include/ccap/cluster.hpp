#pragma once

#include "ccap/ratfun.hpp"
#include "ccap/words.hpp"

namespace ccap {

// Proper suffixes of u that are also proper prefixes of v, i.e. the ways an
// occurrence of v can hang off the tail of an occurrence of u. Sorted by
// length, shortest first.
std::vector<Word> overlap_set(const Word& u, const Word& v);

// Correlation polynomial h_{u,v}(x) = sum over overlap words o of x^(|v|-|o|).
// Zero when the overlap set is empty; never has a constant term.
IntPoly correlation_poly(const Word& u, const Word& v);

// The linear system whose solution yields the cluster generating function.
// Row/column order is the lexicographic word order of the set. Entry (i,j)
// holds h_{v_i,v_j}, plus 1 on the diagonal; the right-hand side for column j
// is -x^(|v_j|).
struct ClusterSystem {
    std::vector<Word> order;
    std::vector<std::vector<IntPoly>> B;
    std::vector<IntPoly> rhs;
};

ClusterSystem build_cluster_system(const ForbiddenSet& f);

// Canonical generating function sum_n N(n) x^n = T(x)/S(x) for the strings
// avoiding a forbidden set, as a coprime integer-coefficient pair with
// S(0) = T(0) > 0. Degree bounds deg T, deg S <= |F| * ell(F) (at least 1 for
// the empty set, where T/S = 1/(1-qx)) are asserted on every construction.
struct GenFun {
    IntPoly T, S;
    int q = 0;
    int ellF = 0;

    // a degenerate set admits only finitely many free strings, which makes
    // T/S a polynomial and S a constant
    bool degenerate() const { return S.degree() == 0; }

    // set_size = |F|, used for the always-on degree-bound assertion
    static GenFun make_canonical(IntPoly T, IntPoly S, int q, int ellF, size_t set_size);
};

struct ClusterResult {
    RationalFunction g; // cluster generating function g_F
    GenFun f;           // 1 / (1 - qx - g_F) in canonical form
};

// Solves the cluster system by exact Gaussian elimination over the rational
// function field. Requires a reduced set; the empty set is allowed and yields
// g = 0, f = 1/(1-qx).
ClusterResult cluster_genfun(const ForbiddenSet& f);

} // namespace ccap
