#include <doctest.h>

#include "ccap/verify.hpp"
#include "test_util.hpp"

using namespace ccap;
using namespace testutil;

TEST_CASE("recurrence coefficients come straight from T and S") {
    auto fib = cluster_genfun(fset(2, {"11"}));
    Recurrence r = recurrence_from_genfun(fib.f);
    CHECK(r.a == std::vector<BigInt>{1, -1, -1});
    CHECK(r.b == std::vector<BigInt>{1, 1});

    auto lpa = cluster_genfun(family_generate(LpaParams{6, 3}, Alphabet::make(2)));
    Recurrence r2 = recurrence_from_genfun(lpa.f);
    CHECK(r2.a == std::vector<BigInt>{1, -1, -1, -1, -1});
    CHECK(r2.b == std::vector<BigInt>{1, 1, 1, 1, 1, 2});

    auto free = cluster_genfun(fset(2, {}));
    Recurrence r3 = recurrence_from_genfun(free.f);
    CHECK(r3.a == std::vector<BigInt>{1, -2});
    CHECK(r3.b == std::vector<BigInt>{1});
}

TEST_CASE("count stream reproduces the published tables") {
    auto pa6 = cluster_genfun(family_generate(PaParams{6}, Alphabet::make(2)));
    auto counts = count_range(pa6.f, 16);
    // n = 9..16
    std::vector<BigInt> expect{294, 508, 878, 1518, 2626, 4544, 7862, 13600};
    CHECK(std::vector<BigInt>(counts.begin() + 9, counts.end()) == expect);

    CHECK(count(pa6.f, 0) == 1);
    CHECK(count(pa6.f, 9) == 294);
}

TEST_CASE("brute force oracle basics") {
    CHECK(brute_force_count(fset(2, {"11"}), 4) == 8);
    CHECK(brute_force_count(fset(2, {"11", "0000"}), 0) == 1);
    CHECK(brute_force_count(family_generate(PaParams{6}, Alphabet::make(2)), 9) == 294);
    CHECK_THROWS_AS(brute_force_count(fset(2, {"11"}), 64), ResourceError);
    CHECK_THROWS_AS(brute_force_count(fset(2, {"11"}), 24, /*budget=*/1000), ResourceError);
}

TEST_CASE("oracle equivalence on random reduced sets") {
    auto sets = random_reduced_sets(2024, 40);
    for (const auto& f : sets) {
        auto res = cluster_genfun(f);
        auto r = checks::count_oracle(f, res.f, 14);
        CAPTURE(r.detail);
        CHECK(r.pass);
        CHECK_FALSE(r.skipped);
    }
}

TEST_CASE("series product: S convolved with counts gives T") {
    auto sets = random_reduced_sets(515, 20);
    for (const auto& f : sets) {
        auto res = cluster_genfun(f);
        auto r = checks::series_product(res.f, 24);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("count bounds and submultiplicativity") {
    auto sets = random_reduced_sets(88, 15);
    for (const auto& f : sets) {
        auto res = cluster_genfun(f);
        auto counts = count_range(res.f, 16);
        for (int n = 0; n <= 16; ++n) {
            CHECK(counts[n] >= 0);
            CHECK(counts[n] <= pow_ui(BigInt(f.q()), n));
        }
        for (int m = 0; m <= 16; ++m) {
            for (int n = 0; m + n <= 16; ++n) {
                CHECK(counts[m + n] <= counts[m] * counts[n]);
            }
        }
    }
}

TEST_CASE("stream keeps only a window yet matches batch extraction") {
    auto pa6 = cluster_genfun(family_generate(PaParams{6}, Alphabet::make(2)));
    CountStream stream(recurrence_from_genfun(pa6.f));
    auto batch = count_range(pa6.f, 200);
    for (int n = 0; n <= 200; ++n) {
        CHECK(stream.next() == batch[n]);
    }
}
