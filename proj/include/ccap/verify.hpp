#pragma once

#include "ccap/capacity.hpp"
#include "ccap/nonoverlap.hpp"

namespace ccap {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false; // resource guard kept the check from running
    std::string detail;
};

// Cross-validation checks used by the verify subcommand and the acceptance
// suite. Each one compares independent computation routes.
namespace checks {

// cluster-method counts vs the brute-force oracle for all n <= n_max
CheckResult count_oracle(const ForbiddenSet& f, const GenFun& fun, int n_max,
                         uint64_t budget = kDefaultEnumerationBudget);

// cluster-method counts vs walk counts on the shift graph for ell <= n <= n_max
CheckResult walk_counts(const ForbiddenSet& f, const GenFun& fun, int n_max,
                        size_t max_vertices = kDefaultMaxGraphVertices);

// exact polynomial identity between T/S and the graph determinants
CheckResult det_identity(const ForbiddenSet& f, const GenFun& fun,
                         size_t max_vertices = kDefaultMaxDetVertices);

// |capacity via S - capacity via det(I - xA)| <= 2 eps
CheckResult capacity_agreement(const ForbiddenSet& f, const GenFun& fun, double eps,
                               size_t max_vertices = kDefaultMaxDetVertices);

// deg T, deg S <= |F| ell(F)
CheckResult degree_bounds(const ForbiddenSet& f, const GenFun& fun);

// convolving S with the emitted counts reproduces T and then zeros
CheckResult series_product(const GenFun& fun, int n_max);

} // namespace checks

// Deterministic generator for random reduced sets, used by the randomized
// suites; identical seeds give identical sets.
std::vector<ForbiddenSet> random_reduced_sets(uint64_t seed, size_t count,
                                              const std::vector<int>& qs = {2, 3},
                                              size_t max_words = 6, int max_len = 6);

// Random non-overlapping code sets with word lengths in [2, max_len].
std::vector<CodeSet> random_nonoverlapping_sets(uint64_t seed, size_t count,
                                                const std::vector<int>& qs = {2, 3},
                                                size_t max_words = 4, int max_len = 5);

} // namespace ccap
