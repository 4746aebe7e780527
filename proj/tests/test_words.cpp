#include <doctest.h>

#include <functional>
#include <random>

#include "ccap/series.hpp"
#include "test_util.hpp"

using namespace ccap;
using namespace testutil;

TEST_CASE("substring relation") {
    CHECK(is_substring(w("11"), w("0110")));
    CHECK_FALSE(is_substring(w("11"), w("0101")));
    CHECK(is_substring(Word{}, w("01")));
    CHECK(is_substring(w("01"), w("01")));
    CHECK_FALSE(is_substring(w("010"), w("01")));
}

TEST_CASE("alphabet construction and word parsing") {
    Alphabet a = Alphabet::make(2);
    CHECK(a.symbols == std::vector<std::string>{"0", "1"});
    CHECK(a.parse_word("0110") == w("0110"));
    CHECK(a.word_str(w("0110")) == "0110");
    CHECK_THROWS_AS(a.parse_word("02"), ParseError);
    CHECK_THROWS_AS(Alphabet::make(0), InputError);
    CHECK_THROWS_AS(Alphabet::make({"a", "a"}), InputError);

    Alphabet dna = Alphabet::make({"A", "C", "G", "T"});
    CHECK(dna.q == 4);
    CHECK(dna.parse_word("ACGT") == Word{0, 1, 2, 3});
}

TEST_CASE("forbidden sets sort, dedupe and validate") {
    ForbiddenSet f = fset(2, {"10", "01", "10"});
    CHECK(f.size() == 2);
    CHECK(f.words()[0] == w("01"));
    CHECK(f.ell() == 2);
    CHECK_THROWS_AS(fset(2, {"02"}), InputError);
    CHECK_THROWS_AS(fset(2, {}).ell(), InputError);
}

TEST_CASE("reduce keeps exactly the minimal words") {
    ForbiddenSet f = fset(2, {"01", "010"});
    CHECK(reduce(f).words() == std::vector<Word>{w("01")});

    ForbiddenSet g = fset(2, {"11", "00"});
    CHECK(reduce(g).words() == std::vector<Word>{w("00"), w("11")});

    // a surviving short word is rejected
    ForbiddenSet h = fset(2, {"0", "00"});
    CHECK_THROWS_AS(reduce(h), ValidationError);

    // idempotence on random sets
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Word> words;
        for (int i = 0; i < 5; ++i) {
            Word word(2 + rng() % 4);
            for (auto& s : word) s = rng() % 2;
            words.push_back(word);
        }
        ForbiddenSet base(Alphabet::make(2), words);
        ForbiddenSet once = reduce(base);
        CHECK(reduce(once) == once);
        CHECK(once.is_reduced());
    }
}

TEST_CASE("reduce never changes the counted language") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Word> words;
        for (int i = 0; i < 4; ++i) {
            Word word(2 + rng() % 3);
            for (auto& s : word) s = rng() % 2;
            words.push_back(word);
            // sometimes plant a superstring to give reduce something to drop
            if (rng() % 2) {
                Word sup = word;
                sup.push_back(rng() % 2);
                words.push_back(sup);
            }
        }
        ForbiddenSet base(Alphabet::make(2), words);
        ForbiddenSet red = reduce(base);
        auto a = brute_force_range(base, 12);
        auto b = brute_force_range(red, 12);
        CHECK(a == b);
    }
}

TEST_CASE("family RLL") {
    ForbiddenSet f = family_generate(RllParams{1, 3}, Alphabet::make(2));
    CHECK(f == fset(2, {"11", "0000"}));
    CHECK(f.is_reduced());
    CHECK_THROWS_AS(family_generate(RllParams{1, 3}, Alphabet::make(3)), InputError);
    CHECK_THROWS_AS(family_generate(RllParams{2, 1}, Alphabet::make(2)), InputError);
    // d = k = 0 forbids the single letter 0, which is rejected
    CHECK_THROWS_AS(family_generate(RllParams{0, 0}, Alphabet::make(2)), ValidationError);
}

TEST_CASE("family LB") {
    ForbiddenSet f = family_generate(LbParams{4, 1}, Alphabet::make(2));
    CHECK(f == fset(2, {"0000", "1111"}));
    CHECK_THROWS_AS(family_generate(LbParams{4, 2}, Alphabet::make(2)), InputError);
    CHECK_THROWS_AS(family_generate(LbParams{4, 1}, Alphabet::make(3)), InputError);

    ForbiddenSet l61 = family_generate(LbParams{6, 1}, Alphabet::make(2));
    CHECK(l61.size() == 14); // weights 0,1,5,6 out of 2^6
}

TEST_CASE("family PA") {
    ForbiddenSet f = family_generate(PaParams{6}, Alphabet::make(2));
    CHECK(f == fset(2, {"111111", "000000", "100001", "010010", "001100", "110011",
                        "101101", "011110"}));
    // odd length uses the literal mirror rule
    ForbiddenSet g = family_generate(PaParams{3}, Alphabet::make(2));
    CHECK(g == fset(2, {"000", "010", "101", "111"}));
    ForbiddenSet t = family_generate(PaParams{2}, Alphabet::make(3));
    CHECK(t.size() == 3); // 00, 11, 22
    CHECK_THROWS_AS(family_generate(PaParams{1}, Alphabet::make(2)), InputError);
}

TEST_CASE("family LPA") {
    ForbiddenSet f = family_generate(LpaParams{6, 3}, Alphabet::make(2));
    CHECK(f == fset(2, {"111111", "000000", "101010", "010101"}));
    ForbiddenSet g = family_generate(LpaParams{7, 2}, Alphabet::make(2));
    CHECK(g == fset(2, {"0000000", "1111111"}));
    CHECK_THROWS_AS(family_generate(LpaParams{3, 4}, Alphabet::make(2)), InputError);
}

TEST_CASE("the combined constraint set reduces to the known five words") {
    std::vector<Word> all;
    for (const auto& fam :
         {family_generate(LbParams{6, 1}, Alphabet::make(2)),
          family_generate(PaParams{6}, Alphabet::make(2)),
          family_generate(RllParams{1, 3}, Alphabet::make(2))}) {
        all.insert(all.end(), fam.words().begin(), fam.words().end());
    }
    ForbiddenSet d = reduce(ForbiddenSet(Alphabet::make(2), all));
    CHECK(d == fset(2, {"11", "0000", "010010", "001000", "000100"}));
}

TEST_CASE("generated families match their defining predicates") {
    struct Case {
        ForbiddenSet f;
        std::function<bool(const Word&)> pred;
        int q;
        int n_max;
    };
    std::vector<Case> cases;
    cases.push_back({family_generate(RllParams{1, 3}, Alphabet::make(2)),
                     [](const Word& u) { return rll_ok(u, 1, 3); }, 2, 14});
    cases.push_back({family_generate(RllParams{2, 4}, Alphabet::make(2)),
                     [](const Word& u) { return rll_ok(u, 2, 4); }, 2, 14});
    cases.push_back({family_generate(LbParams{4, 1}, Alphabet::make(2)),
                     [](const Word& u) { return lb_ok(u, 4, 1); }, 2, 14});
    cases.push_back({family_generate(LbParams{6, 1}, Alphabet::make(2)),
                     [](const Word& u) { return lb_ok(u, 6, 1); }, 2, 14});
    cases.push_back({family_generate(PaParams{4}, Alphabet::make(2)),
                     [](const Word& u) { return pa_ok(u, 4); }, 2, 14});
    cases.push_back({family_generate(PaParams{6}, Alphabet::make(2)),
                     [](const Word& u) { return pa_ok(u, 6); }, 2, 14});
    cases.push_back({family_generate(LpaParams{6, 3}, Alphabet::make(2)),
                     [](const Word& u) { return lpa_ok(u, 6, 3); }, 2, 14});
    cases.push_back({family_generate(LpaParams{5, 3}, Alphabet::make(2)),
                     [](const Word& u) { return lpa_ok(u, 5, 3); }, 2, 14});
    cases.push_back({family_generate(PaParams{3}, Alphabet::make(3)),
                     [](const Word& u) { return pa_ok(u, 3); }, 3, 9});
    cases.push_back({family_generate(LpaParams{4, 3}, Alphabet::make(3)),
                     [](const Word& u) { return lpa_ok(u, 4, 3); }, 3, 9});

    for (const auto& c : cases) {
        auto counts = brute_force_range(c.f, c.n_max);
        for (int n = 0; n <= c.n_max; ++n) {
            long direct = predicate_count(c.q, n, c.pred);
            CAPTURE(n);
            CHECK(counts[n] == BigInt(direct));
        }
    }
}
