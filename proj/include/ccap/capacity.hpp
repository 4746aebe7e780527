#pragma once

#include "ccap/spectral.hpp"

namespace ccap {

enum class CapacityStatus { ok, degenerate };

// Capacity log_q(1/x0) with a guaranteed error bound. value is computed from
// the midpoint of the isolating interval; eps comes from the interval
// endpoints with outward rounding, so |value - capacity| <= eps always holds
// and eps never exceeds the requested accuracy.
struct CapacityEstimate {
    RootInterval x0{Rational(0), Rational(0)};
    double value = 0.0;
    double eps = 0.0;
    enum class Method { cluster, spectral } method = Method::cluster;
};

struct CapacityResult {
    CapacityStatus status = CapacityStatus::degenerate;
    CapacityEstimate estimate;
};

// Capacity from the canonical generating function: isolates the smallest
// positive root of S with root tolerance eps / (2 q ln q), which converts a
// requested capacity accuracy into a sufficient root accuracy.
CapacityResult capacity(const GenFun& f, double eps);

// Same value through the graph route, from the smallest positive root of
// det(I - xA). Subject to the spectral size guard.
CapacityResult capacity_spectral(const ForbiddenSet& f, double eps,
                                 size_t max_vertices = kDefaultMaxDetVertices);

// Companion matrix of a monic polynomial: subdiagonal ones, last column the
// negated low-order coefficients. Its characteristic polynomial is h, so its
// eigenvalues are h's roots. Provided for cross-checks against iterative
// eigenvalue methods; the certified path is root isolation.
std::vector<std::vector<double>> companion_matrix(const RatPoly& h);

// Closed-form capacity upper bound for the LPA family:
//   1 - (q-1)^2 * log_q(e) / (2 q^(ell-p+3))
double lpa_capacity_bound(int q, int ell, int p);

} // namespace ccap
