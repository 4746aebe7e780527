#pragma once

#include "ccap/polymatrix.hpp"
#include "ccap/roots.hpp"
#include "ccap/series.hpp"

namespace ccap {

// Vertex-labeled shift graph on the free words of length ell(F): there is an
// edge u -> v exactly when u and v agree on the overlapping ell-1 symbols.
// Vertices are in lexicographic order; walks of length n - ell generate the
// free strings of length n, each exactly once.
struct DeBruijnGraph {
    int q = 0;
    int ell = 0;
    std::vector<Word> vertices;
    std::vector<std::vector<uint32_t>> out; // adjacency lists, sorted

    size_t m() const { return vertices.size(); }
    bool has_cycle() const;

    // dense 0/1 adjacency matrix entry
    int a(size_t i, size_t j) const;
};

inline constexpr size_t kDefaultMaxGraphVertices = size_t(1) << 17;
inline constexpr size_t kDefaultMaxDetVertices = 150;

// Builds the graph for a nonempty reduced set. An empty vertex set (no free
// word of length ell) is a valid, degenerate result.
DeBruijnGraph build_debruijn(const ForbiddenSet& f,
                             size_t max_vertices = kDefaultMaxGraphVertices);

// Number of free strings of length n >= ell, as the number of (n-ell)-step
// walks: computed by repeated matrix-vector products against the all-ones
// vector, never by full matrix powers.
BigInt walk_count(const DeBruijnGraph& g, long n);

// det(I - xA) and det(I - xA - J), J the all-ones matrix, both exact via
// fraction-free elimination. Guarded: the matrices are dense m x m.
struct GraphDets {
    IntPoly det_shift;     // det(I - xA)
    IntPoly det_shift_all; // det(I - xA - J)
};

GraphDets det_poly(const DeBruijnGraph& g, size_t max_vertices = kDefaultMaxDetVertices);

// Exact check of the determinant identity linking T/S to the graph:
//   T/S = h(x) - x^ell * det(I - xA - J) / det(I - xA)
// with h(x) = sum_{n < ell} N(n) x^n + x^ell and the low-order counts taken
// from the brute-force oracle, keeping the check independent of the cluster
// pipeline. Returns the truth of the cross-multiplied polynomial identity.
bool check_det_identity(const ForbiddenSet& f, const GenFun& fun,
                        size_t max_vertices = kDefaultMaxDetVertices);

// true iff only finitely many free strings exist: no vertices or no cycle
bool is_degenerate(const ForbiddenSet& f,
                   size_t max_vertices = kDefaultMaxGraphVertices);

enum class SpectralStatus { ok, degenerate };

// Enclosure of the spectral radius lambda = 1/x0 where x0 is the smallest
// positive root of det(I - xA).
struct SpectralEstimate {
    SpectralStatus status = SpectralStatus::degenerate;
    Rational lo{0}, hi{0};
};

SpectralEstimate spectral_radius(const DeBruijnGraph& g, const Rational& tol,
                                 size_t max_vertices = kDefaultMaxDetVertices);

} // namespace ccap
