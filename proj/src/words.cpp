#include "ccap/words.hpp"

#include <algorithm>
#include <set>

namespace ccap {

bool lex_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_substring(const Word& u, const Word& w) {
    if (u.empty()) return true;
    if (u.size() > w.size()) return false;
    for (size_t i = 0; i + u.size() <= w.size(); ++i) {
        if (std::equal(u.begin(), u.end(), w.begin() + i)) return true;
    }
    return false;
}

Alphabet Alphabet::make(int q) {
    if (q < 1) throw InputError("Alphabet: q must be at least 1");
    static const char* digits = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::vector<std::string> symbols;
    symbols.reserve(q);
    for (int i = 0; i < q; ++i) {
        if (i < 36) {
            symbols.emplace_back(1, digits[i]);
        } else {
            symbols.push_back("s" + std::to_string(i));
        }
    }
    Alphabet a;
    a.q = q;
    a.symbols = std::move(symbols);
    return a;
}

Alphabet Alphabet::make(std::vector<std::string> symbols) {
    if (symbols.empty()) throw InputError("Alphabet: empty symbol list");
    std::set<std::string> seen;
    for (const auto& s : symbols) {
        if (s.empty()) throw InputError("Alphabet: empty symbol name");
        if (!seen.insert(s).second) throw InputError("Alphabet: duplicate symbol " + s);
    }
    Alphabet a;
    a.q = static_cast<int>(symbols.size());
    a.symbols = std::move(symbols);
    return a;
}

bool Alphabet::single_char_symbols() const {
    return std::all_of(symbols.begin(), symbols.end(),
                       [](const std::string& s) { return s.size() == 1; });
}

std::string Alphabet::word_str(const Word& w) const {
    std::string out;
    for (uint32_t idx : w) {
        if (idx >= symbols.size()) throw InputError("word_str: symbol index out of range");
        out += symbols[idx];
    }
    return out;
}

Word Alphabet::parse_word(const std::string& s) const {
    if (!single_char_symbols())
        throw ParseError("parse_word: words as strings need single-character symbols");
    Word w;
    w.reserve(s.size());
    for (char ch : s) {
        bool found = false;
        for (size_t i = 0; i < symbols.size(); ++i) {
            if (symbols[i][0] == ch) {
                w.push_back(static_cast<uint32_t>(i));
                found = true;
                break;
            }
        }
        if (!found) throw ParseError(std::string("parse_word: unknown symbol '") + ch + "'");
    }
    return w;
}

ForbiddenSet::ForbiddenSet(Alphabet alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)) {
    if (alphabet_.q < 1 || alphabet_.symbols.size() != static_cast<size_t>(alphabet_.q))
        throw InputError("ForbiddenSet: malformed alphabet");
    for (const auto& w : words) {
        for (uint32_t idx : w) {
            if (idx >= static_cast<uint32_t>(alphabet_.q))
                throw InputError("ForbiddenSet: symbol index out of range");
        }
    }
    std::sort(words.begin(), words.end(), lex_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    words_ = std::move(words);
}

int ForbiddenSet::ell() const {
    if (words_.empty()) throw InputError("ell: undefined for an empty set");
    size_t m = 0;
    for (const auto& w : words_) m = std::max(m, w.size());
    return static_cast<int>(m);
}

bool ForbiddenSet::is_reduced() const {
    if (reduced_ != Tri::unknown) return reduced_ == Tri::yes;
    bool ok = true;
    for (const auto& w : words_) {
        if (w.size() < 2) {
            ok = false;
            break;
        }
    }
    if (ok) {
        for (size_t i = 0; i < words_.size() && ok; ++i) {
            for (size_t j = 0; j < words_.size(); ++j) {
                if (i == j) continue;
                if (is_substring(words_[i], words_[j])) {
                    ok = false;
                    break;
                }
            }
        }
    }
    reduced_ = ok ? Tri::yes : Tri::no;
    return ok;
}

ForbiddenSet reduce(const ForbiddenSet& f) {
    std::vector<Word> kept;
    for (const auto& w : f.words_) {
        bool dominated = false;
        for (const auto& u : f.words_) {
            if (u == w) continue;
            if (is_substring(u, w)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(w);
    }
    for (const auto& w : kept) {
        if (w.size() < 2)
            throw ValidationError("reduce: forbidden word of length < 2 (word '" +
                                  f.alphabet().word_str(w) + "')");
    }
    ForbiddenSet r(f.alphabet_, std::move(kept));
    r.reduced_ = Tri::yes;
    return r;
}

namespace {

Word zeros_then(int zeros, bool trailing_one) {
    Word w(zeros, 0);
    if (trailing_one) w.push_back(1);
    return w;
}

std::vector<Word> all_words_of_length(int q, int len) {
    std::vector<Word> out;
    Word w(len, 0);
    while (true) {
        out.push_back(w);
        int i = len - 1;
        while (i >= 0 && w[i] == static_cast<uint32_t>(q - 1)) {
            w[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

} // namespace

ForbiddenSet family_generate(const FamilySpec& spec, const Alphabet& alphabet) {
    const int q = alphabet.q;
    std::vector<Word> words;

    if (const auto* rll = std::get_if<RllParams>(&spec)) {
        if (q != 2) throw InputError("RLL: defined for the binary alphabet only");
        if (rll->d < 0 || rll->d > rll->k) throw InputError("RLL: need 0 <= d <= k");
        for (int t = 0; t < rll->d; ++t) {
            Word w{1};
            for (int i = 0; i < t; ++i) w.push_back(0);
            w.push_back(1);
            words.push_back(std::move(w));
        }
        words.push_back(zeros_then(rll->k + 1, false));
    } else if (const auto* lb = std::get_if<LbParams>(&spec)) {
        if (q != 2) throw InputError("LB: defined for the binary alphabet only");
        if (lb->ell < 2 || lb->delta < 0 || 2 * lb->delta >= lb->ell)
            throw InputError("LB: need ell >= 2 and 0 <= delta < ell/2");
        for (auto& w : all_words_of_length(2, lb->ell)) {
            int wt = 0;
            for (uint32_t s : w) wt += (s != 0);
            // weight outside [ell/2 - delta, ell/2 + delta], compared exactly
            if (2 * wt > lb->ell + 2 * lb->delta || 2 * wt < lb->ell - 2 * lb->delta)
                words.push_back(std::move(w));
        }
    } else if (const auto* pa = std::get_if<PaParams>(&spec)) {
        if (q < 2) throw InputError("PA: need q >= 2");
        if (pa->ell < 2) throw InputError("PA: need ell >= 2");
        int half = (pa->ell + 1) / 2;
        for (const auto& head : all_words_of_length(q, half)) {
            Word w(pa->ell);
            for (int i = 0; i < half; ++i) {
                w[i] = head[i];
                w[pa->ell - 1 - i] = head[i];
            }
            words.push_back(std::move(w));
        }
    } else if (const auto* lpa = std::get_if<LpaParams>(&spec)) {
        if (q < 2) throw InputError("LPA: need q >= 2");
        if (lpa->p < 2 || lpa->ell < lpa->p) throw InputError("LPA: need 2 <= p <= ell");
        for (int period = 1; period < lpa->p; ++period) {
            for (const auto& head : all_words_of_length(q, period)) {
                Word w(lpa->ell);
                for (int i = 0; i < lpa->ell; ++i) w[i] = head[i % period];
                words.push_back(std::move(w));
            }
        }
    } else {
        throw InputError("family_generate: unknown family");
    }

    return reduce(ForbiddenSet(alphabet, std::move(words)));
}

} // namespace ccap
