#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ccap/errors.hpp"

namespace ccap {

// A word is a sequence of symbol indices into an alphabet.
using Word = std::vector<uint32_t>;

bool lex_less(const Word& a, const Word& b);

// true iff u occurs as a contiguous block of w; the empty word always does
bool is_substring(const Word& u, const Word& w);

struct Alphabet {
    int q = 0;                        // number of symbols, >= 1
    std::vector<std::string> symbols; // size q, pairwise distinct

    static Alphabet make(int q);                           // default single-char names
    static Alphabet make(std::vector<std::string> symbols);

    bool single_char_symbols() const;
    std::string word_str(const Word& w) const;
    Word parse_word(const std::string& s) const; // requires single-char symbols
};

enum class Tri : uint8_t { yes, no, unknown };

// A finite set of forbidden words over an alphabet. Words are kept sorted
// lexicographically and duplicate-free; that order is the deterministic row
// and vertex order used everywhere downstream.
class ForbiddenSet {
public:
    ForbiddenSet(Alphabet alphabet, std::vector<Word> words);

    const Alphabet& alphabet() const { return alphabet_; }
    int q() const { return alphabet_.q; }
    const std::vector<Word>& words() const { return words_; }
    bool empty() const { return words_.empty(); }
    size_t size() const { return words_.size(); }

    // max word length; only defined for a nonempty set
    int ell() const;

    Tri reduced_flag() const { return reduced_; }
    // checks (and caches) whether all lengths are >= 2 and no word contains
    // another as a substring
    bool is_reduced() const;

    Tri nondegenerate_flag() const { return nondegenerate_; }
    void set_nondegenerate(bool v) const { nondegenerate_ = v ? Tri::yes : Tri::no; }

    friend bool operator==(const ForbiddenSet& a, const ForbiddenSet& b) {
        return a.alphabet_.q == b.alphabet_.q && a.words_ == b.words_;
    }

private:
    friend ForbiddenSet reduce(const ForbiddenSet& f);
    Alphabet alphabet_;
    std::vector<Word> words_;
    mutable Tri reduced_ = Tri::unknown;
    mutable Tri nondegenerate_ = Tri::unknown;
};

// Drops every word that contains another member as a proper substring. The
// result defines the same set of free strings. Throws ValidationError if a
// surviving word has length < 2 (such constraints would shrink the alphabet
// and are rejected rather than rewritten).
ForbiddenSet reduce(const ForbiddenSet& f);

// Constraint families. RLL and LB are binary; PA and LPA accept any q >= 2.
struct RllParams { int d = 0; int k = 0; };        // runs of zeros between ones in [d, k]
struct LbParams { int ell = 0; int delta = 0; };   // window weight within ell/2 +- delta
struct PaParams { int ell = 0; };                  // no palindromic window of length ell
struct LpaParams { int ell = 0; int p = 0; };      // no window of length ell with period < p

using FamilySpec = std::variant<RllParams, LbParams, PaParams, LpaParams>;

// Materializes the family's forbidden set and reduces it.
ForbiddenSet family_generate(const FamilySpec& spec, const Alphabet& alphabet);

} // namespace ccap
