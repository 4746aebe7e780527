#include "ccap/series.hpp"

#include <cmath>

namespace ccap {

Recurrence recurrence_from_genfun(const GenFun& f) {
    Recurrence r;
    r.a = f.S.coeffs();
    r.b = f.T.coeffs();
    return r;
}

CountStream::CountStream(Recurrence rec) : rec_(std::move(rec)) {
    if (rec_.a.empty() || rec_.a[0] <= 0)
        throw InputError("CountStream: need a[0] = S(0) > 0");
    window_.assign(std::max(1, rec_.s()), BigInt(0));
}

BigInt CountStream::next() {
    // a0*N(n) = b_n - sum_{i>=1} a_i*N(n-i)
    BigInt acc = (n_ <= rec_.t()) ? rec_.b[n_] : BigInt(0);
    const int s = rec_.s();
    for (int i = 1; i <= s && i <= n_; ++i) {
        acc -= rec_.a[i] * window_[(n_ - i) % window_.size()];
    }
    BigInt value;
    if (rec_.a[0] == 1) {
        value = std::move(acc);
    } else {
        BigInt rem;
        mpz_tdiv_qr(value.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(),
                    rec_.a[0].get_mpz_t());
        if (rem != 0) throw InternalError("CountStream: division by a[0] not exact");
    }
    if (s > 0) window_[n_ % window_.size()] = value;
    ++n_;
    return value;
}

BigInt count(const GenFun& f, long n) {
    if (n < 0) throw InputError("count: n must be nonnegative");
    CountStream cs(recurrence_from_genfun(f));
    BigInt v;
    for (long i = 0; i <= n; ++i) v = cs.next();
    return v;
}

std::vector<BigInt> count_range(const GenFun& f, long n_max) {
    if (n_max < 0) throw InputError("count_range: n_max must be nonnegative");
    CountStream cs(recurrence_from_genfun(f));
    std::vector<BigInt> out;
    out.reserve(n_max + 1);
    for (long i = 0; i <= n_max; ++i) out.push_back(cs.next());
    return out;
}

namespace {

struct Walker {
    int q = 0;
    int n_max = 0;
    int max_len = 0;                        // longest forbidden word
    std::vector<std::vector<uint32_t>> fw;  // forbidden words
    std::vector<uint32_t> buf;
    std::vector<uint64_t> tally;

    // true iff some forbidden word ends exactly at position depth-1
    bool blocked(int depth) const {
        for (const auto& w : fw) {
            const int len = static_cast<int>(w.size());
            if (len > depth) continue;
            bool match = true;
            for (int i = len - 1; i >= 0; --i) {
                if (buf[depth - len + i] != w[i]) {
                    match = false;
                    break;
                }
            }
            if (match) return true;
        }
        return false;
    }

    void run(int depth) {
        if (depth == n_max) return;
        for (uint32_t c = 0; c < static_cast<uint32_t>(q); ++c) {
            buf[depth] = c;
            if (blocked(depth + 1)) continue;
            ++tally[depth + 1];
            run(depth + 1);
        }
    }
};

} // namespace

std::vector<BigInt> brute_force_range(const ForbiddenSet& f, int n_max, uint64_t budget) {
    if (n_max < 0) throw InputError("brute_force_range: n_max must be nonnegative");
    // guard q^n <= budget without overflow
    double logsz = static_cast<double>(n_max) * std::log2(static_cast<double>(f.q()));
    if (logsz > 62.0 || pow_ui(BigInt(f.q()), n_max) > BigInt(static_cast<unsigned long>(budget)))
        throw ResourceError("brute_force_range: q^n exceeds enumeration budget");

    Walker w;
    w.q = f.q();
    w.n_max = n_max;
    w.fw.assign(f.words().begin(), f.words().end());
    w.buf.assign(std::max(1, n_max), 0);
    w.tally.assign(n_max + 1, 0);
    w.tally[0] = 1; // the empty string is free (no forbidden word is empty)
    if (n_max > 0) w.run(0);

    std::vector<BigInt> out(n_max + 1);
    for (int i = 0; i <= n_max; ++i) out[i] = BigInt(static_cast<unsigned long>(w.tally[i]));
    return out;
}

BigInt brute_force_count(const ForbiddenSet& f, int n, uint64_t budget) {
    return brute_force_range(f, n, budget).back();
}

} // namespace ccap
