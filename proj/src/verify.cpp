#include "ccap/verify.hpp"

#include <random>
#include <sstream>

namespace ccap {

namespace checks {

CheckResult count_oracle(const ForbiddenSet& f, const GenFun& fun, int n_max,
                         uint64_t budget) {
    CheckResult r{"count-oracle", false, false, ""};
    std::vector<BigInt> oracle;
    try {
        oracle = brute_force_range(f, n_max, budget);
    } catch (const ResourceError& e) {
        r.skipped = true;
        r.pass = true;
        r.detail = e.what();
        return r;
    }
    std::vector<BigInt> fast = count_range(fun, n_max);
    for (int n = 0; n <= n_max; ++n) {
        if (fast[n] != oracle[n]) {
            std::ostringstream os;
            os << "mismatch at n=" << n << ": " << fast[n].get_str() << " vs "
               << oracle[n].get_str();
            r.detail = os.str();
            return r;
        }
    }
    r.pass = true;
    return r;
}

CheckResult walk_counts(const ForbiddenSet& f, const GenFun& fun, int n_max,
                        size_t max_vertices) {
    CheckResult r{"walk-counts", false, false, ""};
    DeBruijnGraph g;
    try {
        g = build_debruijn(f, max_vertices);
    } catch (const ResourceError& e) {
        r.skipped = true;
        r.pass = true;
        r.detail = e.what();
        return r;
    }
    std::vector<BigInt> fast = count_range(fun, n_max);
    for (int n = g.ell; n <= n_max; ++n) {
        BigInt wc = walk_count(g, n);
        if (wc != fast[n]) {
            std::ostringstream os;
            os << "mismatch at n=" << n << ": walks " << wc.get_str() << " vs counts "
               << fast[n].get_str();
            r.detail = os.str();
            return r;
        }
    }
    r.pass = true;
    return r;
}

CheckResult det_identity(const ForbiddenSet& f, const GenFun& fun, size_t max_vertices) {
    CheckResult r{"det-identity", false, false, ""};
    try {
        r.pass = check_det_identity(f, fun, max_vertices);
        if (!r.pass) r.detail = "cross-multiplied polynomial identity failed";
    } catch (const ResourceError& e) {
        r.skipped = true;
        r.pass = true;
        r.detail = e.what();
    }
    return r;
}

CheckResult capacity_agreement(const ForbiddenSet& f, const GenFun& fun, double eps,
                               size_t max_vertices) {
    CheckResult r{"capacity-agreement", false, false, ""};
    try {
        CapacityResult a = capacity(fun, eps);
        CapacityResult b = capacity_spectral(f, eps, max_vertices);
        if (a.status != b.status) {
            r.detail = "methods disagree on degeneracy";
            return r;
        }
        if (a.status == CapacityStatus::degenerate) {
            r.pass = true;
            r.detail = "degenerate set, capacity undefined on both routes";
            return r;
        }
        double diff = std::abs(a.estimate.value - b.estimate.value);
        r.pass = diff <= 2 * eps;
        if (!r.pass) {
            std::ostringstream os;
            os << "cluster " << a.estimate.value << " vs spectral " << b.estimate.value;
            r.detail = os.str();
        }
    } catch (const ResourceError& e) {
        r.skipped = true;
        r.pass = true;
        r.detail = e.what();
    }
    return r;
}

CheckResult degree_bounds(const ForbiddenSet& f, const GenFun& fun) {
    CheckResult r{"degree-bounds", false, false, ""};
    long limit = f.empty() ? 1 : static_cast<long>(f.size()) * f.ell();
    r.pass = fun.T.degree() <= limit && fun.S.degree() <= limit;
    if (!r.pass) {
        std::ostringstream os;
        os << "deg T=" << fun.T.degree() << " deg S=" << fun.S.degree() << " limit="
           << limit;
        r.detail = os.str();
    }
    return r;
}

CheckResult series_product(const GenFun& fun, int n_max) {
    CheckResult r{"series-product", false, false, ""};
    std::vector<BigInt> counts = count_range(fun, n_max);
    for (int n = 0; n <= n_max; ++n) {
        BigInt conv(0);
        for (int i = 0; i <= fun.S.degree() && i <= n; ++i) {
            conv += fun.S.coeff(i) * counts[n - i];
        }
        BigInt expect = (n <= fun.T.degree()) ? fun.T.coeff(n) : BigInt(0);
        if (conv != expect) {
            std::ostringstream os;
            os << "S*N convolution differs from T at n=" << n;
            r.detail = os.str();
            return r;
        }
    }
    r.pass = true;
    return r;
}

} // namespace checks

std::vector<ForbiddenSet> random_reduced_sets(uint64_t seed, size_t count,
                                              const std::vector<int>& qs,
                                              size_t max_words, int max_len) {
    std::mt19937_64 rng(seed);
    std::vector<ForbiddenSet> out;
    out.reserve(count);
    while (out.size() < count) {
        int q = qs[rng() % qs.size()];
        size_t n_words = 1 + rng() % max_words;
        std::vector<Word> words;
        for (size_t i = 0; i < n_words; ++i) {
            int len = 2 + static_cast<int>(rng() % (max_len - 1));
            Word w(len);
            for (auto& s : w) s = static_cast<uint32_t>(rng() % q);
            words.push_back(std::move(w));
        }
        out.push_back(reduce(ForbiddenSet(Alphabet::make(q), std::move(words))));
    }
    return out;
}

std::vector<CodeSet> random_nonoverlapping_sets(uint64_t seed, size_t count,
                                                const std::vector<int>& qs,
                                                size_t max_words, int max_len) {
    std::mt19937_64 rng(seed);
    std::vector<CodeSet> out;
    out.reserve(count);
    while (out.size() < count) {
        int q = qs[rng() % qs.size()];
        std::vector<Word> words;
        size_t target = 1 + rng() % max_words;
        for (int tries = 0; tries < 80 && words.size() < target; ++tries) {
            int len = 2 + static_cast<int>(rng() % (max_len - 1));
            Word w(len);
            for (auto& s : w) s = static_cast<uint32_t>(rng() % q);
            auto extended = words;
            extended.push_back(w);
            if (is_nonoverlapping(CodeSet::make(Alphabet::make(q), extended))) {
                words.push_back(std::move(w));
            }
        }
        if (words.empty()) continue;
        out.push_back(CodeSet::make(Alphabet::make(q), std::move(words)));
    }
    return out;
}

} // namespace ccap
