#pragma once

#include <optional>
#include <utility>

#include "ccap/poly.hpp"

namespace ccap {

// Closed interval certified to contain the smallest positive real root of the
// polynomial it was computed for, and no other real root.
struct RootInterval {
    Rational lo, hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool is_exact() const { return lo == hi; }
};

enum class RootStatus {
    found,
    no_positive_root,
};

struct RootIsolation {
    RootStatus status = RootStatus::no_positive_root;
    RootInterval interval{Rational(0), Rational(0)};
};

// Isolates the smallest positive real root of p to width <= tol using a Sturm
// chain over the squarefree part: exact sign counts certify that the interval
// holds exactly one distinct root of p and that no root lies in (0, lo).
// When the bisection lands on a rational root the interval collapses to a
// point. search_hint, when given, restricts the search to (0, hint].
RootIsolation smallest_positive_root(const IntPoly& p, const Rational& tol,
                                     std::optional<Rational> search_hint = std::nullopt);

// Number of distinct real roots of p in the half-open interval (a, b].
// Exposed for tests; requires p(a) != 0 and p(b) != 0.
int count_roots_in(const IntPoly& p, const Rational& a, const Rational& b);

} // namespace ccap
