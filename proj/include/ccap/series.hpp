#pragma once

#include <cstdint>
#include <vector>

#include "ccap/cluster.hpp"

namespace ccap {

// Integer recurrence driving coefficient extraction from T/S:
//   a[0]*N(n) + a[1]*N(n-1) + ... + a[s]*N(n-s) = b[n]   (b[n] = 0 for n > t)
struct Recurrence {
    std::vector<BigInt> a; // coefficients of S, lowest degree first
    std::vector<BigInt> b; // coefficients of T
    int s() const { return static_cast<int>(a.size()) - 1; }
    int t() const { return static_cast<int>(b.size()) - 1; }
};

Recurrence recurrence_from_genfun(const GenFun& f);

// Streams N(0), N(1), ... keeping only the trailing s values, so memory stays
// O(s) however far the stream runs.
class CountStream {
public:
    explicit CountStream(Recurrence rec);
    BigInt next();
    long cursor() const { return n_; }

private:
    Recurrence rec_;
    std::vector<BigInt> window_; // last s counts, ring-indexed
    long n_ = 0;
};

// Exact number of free strings of length n.
BigInt count(const GenFun& f, long n);
// N(0..n_max) in one pass.
std::vector<BigInt> count_range(const GenFun& f, long n_max);

inline constexpr uint64_t kDefaultEnumerationBudget = uint64_t(1) << 31;

// Independent oracle: depth-first walk over all strings, pruning as soon as a
// forbidden word matches a suffix of the current prefix. Guarded by q^n <=
// budget. Counts every depth in one walk.
std::vector<BigInt> brute_force_range(const ForbiddenSet& f, int n_max,
                                      uint64_t budget = kDefaultEnumerationBudget);
BigInt brute_force_count(const ForbiddenSet& f, int n,
                         uint64_t budget = kDefaultEnumerationBudget);

} // namespace ccap
