#include <doctest.h>

#include <algorithm>
#include <random>

#include "ccap/series.hpp"
#include "ccap/verify.hpp"
#include "test_util.hpp"

using namespace ccap;
using namespace testutil;

TEST_CASE("overlap sets") {
    auto ov = overlap_set(w("11"), w("11"));
    REQUIRE(ov.size() == 1);
    CHECK(ov[0] == w("1"));

    auto ov2 = overlap_set(w("010010"), w("010010"));
    REQUIRE(ov2.size() == 2);
    CHECK(ov2[0] == w("0"));
    CHECK(ov2[1] == w("010"));

    CHECK(overlap_set(w("01"), w("23")).empty());
    CHECK_THROWS_AS(overlap_set(Word{}, w("1")), InputError);
}

TEST_CASE("correlation polynomials") {
    CHECK(correlation_poly(w("11"), w("11")) == IntPoly{0, 1});
    CHECK(correlation_poly(w("010010"), w("010010")) == IntPoly{0, 0, 0, 1, 0, 1});
    CHECK(correlation_poly(w("01"), w("23")).is_zero());
    // asymmetric pair
    CHECK(correlation_poly(w("01"), w("11")) == IntPoly{0, 1});
    CHECK(correlation_poly(w("11"), w("01")).is_zero());
}

TEST_CASE("cluster system shape") {
    ClusterSystem s1 = build_cluster_system(fset(2, {"11"}));
    REQUIRE(s1.order.size() == 1);
    CHECK(s1.B[0][0] == IntPoly{1, 1});
    CHECK(s1.rhs[0] == IntPoly{0, 0, -1});

    ClusterSystem s2 = build_cluster_system(fset(1, {"000"}));
    CHECK(s2.B[0][0] == IntPoly{1, 1, 1});
    CHECK(s2.rhs[0] == IntPoly{0, 0, 0, -1});

    ClusterSystem s3 = build_cluster_system(fset(2, {"01"}));
    CHECK(s3.B[0][0] == IntPoly::one()); // zero self-overlap
    CHECK(s3.rhs[0] == IntPoly{0, 0, -1});

    CHECK_THROWS_AS(build_cluster_system(fset(2, {"01", "010"})), ValidationError);
    CHECK_THROWS_AS(build_cluster_system(fset(2, {})), InputError);

    // diagonal entries carry constant term 1, off-diagonal none, and degrees
    // stay below ell
    ForbiddenSet pa6 = family_generate(PaParams{6}, Alphabet::make(2));
    ClusterSystem sys = build_cluster_system(pa6);
    for (size_t i = 0; i < sys.order.size(); ++i) {
        for (size_t j = 0; j < sys.order.size(); ++j) {
            CHECK(sys.B[i][j].coeff(0) == (i == j ? 1 : 0));
            CHECK(sys.B[i][j].degree() <= pa6.ell() - 1);
        }
    }
}

TEST_CASE("generating function for the single word 11") {
    auto res = cluster_genfun(fset(2, {"11"}));
    CHECK(res.g.num() == IntPoly{0, 0, -1});
    CHECK(res.g.den() == IntPoly{1, 1});
    CHECK(res.f.T == IntPoly{1, 1});
    CHECK(res.f.S == IntPoly{1, -1, -1});
    auto counts = count_range(res.f, 5);
    CHECK(counts == std::vector<BigInt>{1, 2, 3, 5, 8, 13});
}

TEST_CASE("generating function for the period-avoidance example") {
    auto res = cluster_genfun(family_generate(LpaParams{6, 3}, Alphabet::make(2)));
    CHECK(res.f.T == IntPoly{1, 1, 1, 1, 1, 2});
    CHECK(res.f.S == IntPoly{1, -1, -1, -1, -1});
}

TEST_CASE("empty constraint set") {
    auto res = cluster_genfun(fset(3, {}));
    CHECK(res.g.is_zero());
    CHECK(res.f.T == IntPoly::one());
    CHECK(res.f.S == IntPoly{1, -3});
    CHECK(res.f.ellF == 0);
}

TEST_CASE("genfun invariants on random reduced sets") {
    auto sets = random_reduced_sets(101, 40);
    for (const auto& f : sets) {
        auto res = cluster_genfun(f);
        CHECK(res.f.T.coeff(0) == res.f.S.coeff(0));
        CHECK(res.f.S.coeff(0) > 0);
        long limit = static_cast<long>(f.size()) * f.ell();
        CHECK(res.f.T.degree() <= limit);
        CHECK(res.f.S.degree() <= limit);
        // coprime and content-free
        IntPoly g = poly_gcd(res.f.T, res.f.S);
        CHECK(g.degree() == 0);
        BigInt cont;
        mpz_gcd(cont.get_mpz_t(), res.f.T.content().get_mpz_t(),
                res.f.S.content().get_mpz_t());
        CHECK(cont == 1);
        auto counts = count_range(res.f, 2);
        CHECK(counts[0] == 1);
        CHECK(counts[1] == f.q());
    }
}

TEST_CASE("cluster algebra matches direct cluster enumeration") {
    std::vector<ForbiddenSet> tiny = {
        fset(2, {"11"}),
        fset(2, {"010"}),
        fset(2, {"11", "000"}),
        fset(2, {"0110", "101"}),
        fset(1, {"000"}),
        fset(3, {"012", "120"}),
    };
    for (const auto& f : tiny) {
        auto res = cluster_genfun(f);
        auto coeffs = series(res.g, 8);
        auto direct = enumerate_cluster_coeffs(f, 8);
        for (int n = 0; n <= 8; ++n) {
            CAPTURE(n);
            CHECK(coeffs[n] == Rational(direct[n]));
        }
    }
}

TEST_CASE("word order never changes the canonical pair") {
    std::mt19937_64 rng(77);
    auto sets = random_reduced_sets(909, 10);
    for (const auto& f : sets) {
        auto base = cluster_genfun(f);
        std::vector<Word> shuffled = f.words();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        ForbiddenSet again(f.alphabet(), shuffled);
        auto res = cluster_genfun(again);
        CHECK(res.f.T == base.f.T);
        CHECK(res.f.S == base.f.S);
    }
}

TEST_CASE("non-overlapping sets have single-occurrence clusters") {
    // for such sets g is exactly minus the length census
    std::vector<ForbiddenSet> sets = {fset(2, {"01"}), fset(2, {"011"}),
                                      fset(3, {"01", "02"})};
    for (const auto& f : sets) {
        auto res = cluster_genfun(f);
        std::vector<BigInt> census(f.ell() + 1, BigInt(0));
        for (const auto& word : f.words()) census[word.size()] -= 1;
        CHECK(res.g.num() == IntPoly(std::move(census)));
        CHECK(res.g.den() == IntPoly::one());
    }
}
