#include "ccap/nonoverlap.hpp"

#include <algorithm>

namespace ccap {

namespace {

// some proper prefix of v equals a proper suffix of u
bool bifix_clash(const Word& u, const Word& v) {
    size_t max_len = std::min(u.size(), v.size()) - 1;
    for (size_t len = 1; len <= max_len; ++len) {
        if (std::equal(u.end() - len, u.end(), v.begin())) return true;
    }
    return false;
}

bool pair_compatible(const Word& u, const Word& v) {
    if (u != v && (is_substring(u, v) || is_substring(v, u))) return false;
    if (!u.empty() && !v.empty()) {
        if (bifix_clash(u, v) || bifix_clash(v, u)) return false;
    }
    return true;
}

} // namespace

CodeSet CodeSet::make(Alphabet alphabet, std::vector<Word> words) {
    for (const auto& w : words) {
        if (w.empty()) throw InputError("CodeSet: empty codeword");
        for (uint32_t s : w) {
            if (s >= static_cast<uint32_t>(alphabet.q))
                throw InputError("CodeSet: symbol index out of range");
        }
    }
    std::sort(words.begin(), words.end(), lex_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return CodeSet{std::move(alphabet), std::move(words)};
}

bool is_nonoverlapping(const CodeSet& c) {
    const auto& ws = c.words;
    for (size_t i = 0; i < ws.size(); ++i) {
        for (size_t j = i; j < ws.size(); ++j) {
            if (!pair_compatible(ws[i], ws[j])) return false;
        }
    }
    return true;
}

GenFun nonoverlap_genfun(const CodeSet& c) {
    if (!is_nonoverlapping(c)) throw InputError("nonoverlap_genfun: set is overlapping");
    int ell = 0;
    for (const auto& w : c.words) {
        if (w.size() < 2) throw InputError("nonoverlap_genfun: codeword of length < 2");
        ell = std::max<int>(ell, static_cast<int>(w.size()));
    }
    const int q = c.alphabet.q;
    // S = 1 - qx + sum_i |C_i| x^i
    std::vector<BigInt> s(std::max(2, ell + 1), BigInt(0));
    s[0] = 1;
    s[1] = -q;
    for (const auto& w : c.words) s[w.size()] += 1;
    return GenFun::make_canonical(IntPoly::one(), IntPoly(std::move(s)), q, ell,
                                  c.words.size());
}

BoundReport levenshtein_bound(int q, int n) {
    if (q < 2 || n < 2) throw InputError("levenshtein_bound: need q >= 2 and n >= 2");
    BigInt num = pow_ui(BigInt(n - 1), n - 1) * pow_ui(BigInt(q), n);
    BigInt den = pow_ui(BigInt(n), n);
    BoundReport r;
    r.q = q;
    r.n = n;
    r.bound = make_ratio(num, den);
    r.floor_value = rational_floor(r.bound);
    return r;
}

MaxCodeResult max_variable_length_code(int q, int n, size_t budget) {
    if (q < 2 || n < 2) throw InputError("max_variable_length_code: need q >= 2, n >= 2");

    // candidates: words of length 2..n that do not clash with themselves
    std::vector<Word> cand;
    for (int len = 2; len <= n; ++len) {
        Word w(len, 0);
        while (true) {
            if (!bifix_clash(w, w)) cand.push_back(w);
            int i = len - 1;
            while (i >= 0 && w[i] == static_cast<uint32_t>(q - 1)) {
                w[i] = 0;
                --i;
            }
            if (i < 0) break;
            ++w[i];
        }
    }
    if (cand.size() > budget)
        throw ResourceError("max_variable_length_code: candidate budget exceeded");

    const size_t nc = cand.size();
    std::vector<std::vector<bool>> compat(nc, std::vector<bool>(nc, false));
    for (size_t i = 0; i < nc; ++i) {
        for (size_t j = i + 1; j < nc; ++j) {
            compat[i][j] = compat[j][i] = pair_compatible(cand[i], cand[j]);
        }
    }

    // maximum clique in the compatibility graph, plain branch and bound
    std::vector<uint32_t> best, current;
    auto extend = [&](auto&& self, const std::vector<uint32_t>& allowed) -> void {
        if (current.size() + allowed.size() <= best.size()) return;
        if (allowed.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        for (size_t idx = 0; idx < allowed.size(); ++idx) {
            if (current.size() + (allowed.size() - idx) <= best.size()) break;
            uint32_t v = allowed[idx];
            std::vector<uint32_t> next;
            for (size_t j = idx + 1; j < allowed.size(); ++j) {
                if (compat[v][allowed[j]]) next.push_back(allowed[j]);
            }
            current.push_back(v);
            self(self, next);
            current.pop_back();
        }
    };
    std::vector<uint32_t> all(nc);
    for (size_t i = 0; i < nc; ++i) all[i] = static_cast<uint32_t>(i);
    extend(extend, all);

    std::vector<Word> witness;
    witness.reserve(best.size());
    for (uint32_t i : best) witness.push_back(cand[i]);
    MaxCodeResult res;
    res.size = best.size();
    res.witness = CodeSet::make(Alphabet::make(q), std::move(witness));
    return res;
}

} // namespace ccap
