#include <doctest.h>

#include <cmath>
#include <set>

#include "gpir/field.hpp"

using namespace gpir;

TEST_CASE("primality check") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64(5));
    CHECK(is_prime_u64(7));
    CHECK(is_prime_u64(101));
    CHECK(is_prime_u64(2147483647ull));       // 2^31 - 1
    CHECK(is_prime_u64(1000000007ull));
    CHECK_FALSE(is_prime_u64(0));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(4));
    CHECK_FALSE(is_prime_u64(9));
    CHECK_FALSE(is_prime_u64(561));           // Carmichael
    CHECK_FALSE(is_prime_u64(3215031751ull)); // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("field construction rejects bad moduli") {
    CHECK_NOTHROW(make_field(3));
    CHECK_NOTHROW(make_field(5));
    CHECK_NOTHROW(make_field(101));
    CHECK_THROWS_AS(make_field(2), std::invalid_argument);
    CHECK_THROWS_AS(make_field(4), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(9), std::invalid_argument);
}

TEST_CASE("arithmetic in F_3") {
    Field f = make_field(3);
    CHECK(f.add(2, 2) == 1);
    CHECK(f.sub(0, 1) == 2);
    CHECK(f.neg(1) == 2);
    CHECK(f.neg(0) == 0);
    CHECK(f.mul(2, 2) == 1);
    CHECK(f.inv(2) == 2);
    CHECK(f.div(1, 2) == 2);
    CHECK(f.element(-1) == 2);
    CHECK(f.element(-4) == 2);
    CHECK(f.element(7) == 1);
}

TEST_CASE("inverses in F_5 and F_7") {
    Field f5 = make_field(5);
    CHECK(f5.inv(3) == 2);
    CHECK(f5.inv(4) == 4);
    Field f7 = make_field(7);
    for (Elem x = 1; x < 7; ++x) {
        CHECK(f7.mul(x, f7.inv(x)) == 1);
        CHECK(f7.inv(f7.inv(x)) == x);
    }
    CHECK_THROWS_AS(f7.inv(0), std::domain_error);
}

TEST_CASE("pow matches repeated multiplication") {
    Field f = make_field(11);
    for (Elem a = 0; a < 11; ++a) {
        Elem acc = 1;
        for (std::uint64_t e = 0; e <= 12; ++e) {
            CHECK(f.pow(a, e) == acc);
            acc = f.mul(acc, a);
        }
    }
    // Fermat: a^(q-1) = 1 for a != 0.
    for (Elem a = 1; a < 11; ++a) CHECK(f.pow(a, 10) == 1);
}

TEST_CASE("sampling ranges") {
    Rng rng(42);
    Field f3 = make_field(3);
    for (int i = 0; i < 200; ++i) {
        CHECK(f3.sample_h(rng) == 2); // only element outside {0,1}
        Elem nz = f3.sample_nonzero(rng);
        CHECK(nz >= 1);
        CHECK(nz <= 2);
        CHECK(f3.sample_uniform(rng) < 3);
    }
}

TEST_CASE("sample_h is uniform over {2..q-1} in F_5") {
    Field f = make_field(5);
    Rng rng(7);
    const int draws = 100000;
    int counts[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < draws; ++i) {
        Elem h = f.sample_h(rng);
        REQUIRE(h >= 2);
        REQUIRE(h <= 4);
        counts[h]++;
    }
    // Chi-square against uniform over 3 cells, 2 dof; 13.8 ~ p=0.001.
    double expected = draws / 3.0;
    double chi2 = 0;
    for (int v = 2; v <= 4; ++v) {
        double d = counts[v] - expected;
        chi2 += d * d / expected;
    }
    CHECK(chi2 < 13.8);
}

TEST_CASE("uniform_below covers the range and rejects empty") {
    Rng rng(1);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 1000; ++i) seen.insert(uniform_below(rng, 6));
    CHECK(seen == std::set<std::uint64_t>{0, 1, 2, 3, 4, 5});
    CHECK_THROWS_AS(uniform_below(rng, 0), std::invalid_argument);
}
