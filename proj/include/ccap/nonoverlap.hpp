#pragma once

#include "ccap/cluster.hpp"

namespace ccap {

// A set of candidate codewords over an alphabet. Variable-length
// non-overlapping means: for every u, v in the set (u = v included) no proper
// prefix of v equals a proper suffix of u, and no member is a substring of
// another member.
struct CodeSet {
    Alphabet alphabet;
    std::vector<Word> words; // sorted, unique

    static CodeSet make(Alphabet alphabet, std::vector<Word> words);
};

bool is_nonoverlapping(const CodeSet& c);

// Closed-form generating function for the strings avoiding a non-overlapping
// set whose words all have length >= 2: every cluster is a single occurrence,
// so f = 1 / (1 - qx + sum_i |C_i| x^i). Must agree exactly with the general
// cluster computation.
GenFun nonoverlap_genfun(const CodeSet& c);

// Upper bound ((n-1)/n)^(n-1) * q^n / n on the size of non-overlapping codes
// with lengths up to n, kept as an exact rational; tight when n divides q.
struct BoundReport {
    int q = 0;
    int n = 0;
    Rational bound;
    BigInt floor_value;
};

BoundReport levenshtein_bound(int q, int n);

// Exhaustive maximum over non-overlapping codes with word lengths in [2, n].
// Length-1 codewords are excluded from the search: a single-symbol codeword
// only removes its symbol from the usable alphabet (the substring rule bans
// it anywhere else), which never helps at these scales and keeps the search
// aligned with the closed-form machinery above. Budget caps the number of
// candidate words considered.
struct MaxCodeResult {
    size_t size = 0;
    CodeSet witness;
};

MaxCodeResult max_variable_length_code(int q, int n, size_t budget = 512);

} // namespace ccap
