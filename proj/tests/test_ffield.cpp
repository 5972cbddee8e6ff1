#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "dwork/ffield.hpp"

using namespace dwork;
using namespace dwork::ff;

TEST_CASE("prime field F_11") {
    FieldCtx F = make_field(11, 1);
    CHECK(F.q() == 11);
    // generator of multiplicative order 10
    FqElem g = F.generator();
    std::set<uint32_t> powers;
    FqElem x = F.one();
    for (int i = 0; i < 10; ++i) {
        powers.insert(x.v);
        x = F.mul(x, g);
    }
    CHECK(powers.size() == 10);
    CHECK(x == F.one());
}

TEST_CASE("F_9 generator order 8") {
    FieldCtx F = make_field(3, 2);
    CHECK(F.q() == 9);
    FqElem g = F.generator();
    int order = 1;
    FqElem x = g;
    while (x != F.one()) {
        x = F.mul(x, g);
        ++order;
    }
    CHECK(order == 8);
}

TEST_CASE("F_2401 generator order 2400 by exhaustive order check") {
    FieldCtx F = make_field(7, 4);
    CHECK(F.q() == 2401);
    FqElem g = F.generator();
    FqElem x = g;
    int order = 1;
    while (x != F.one()) {
        x = F.mul(x, g);
        ++order;
        REQUIRE(order <= 2400);
    }
    CHECK(order == 2400);
}

TEST_CASE("make_field rejects bad parameters") {
    CHECK_THROWS_AS(make_field(2, 1), ConfigError);
    CHECK_THROWS_AS(make_field(5, 2), ConfigError);
    CHECK_THROWS_AS(make_field(9, 1), ConfigError);   // not prime
    CHECK_THROWS_AS(make_field(11, 0), ConfigError);
    CHECK_THROWS_AS(make_field(11, 5), ConfigError);
}

TEST_CASE("field axioms on random samples") {
    for (auto [p, k] : {std::pair{11u, 1u}, {3u, 2u}, {7u, 2u}, {3u, 4u}}) {
        FieldCtx F = make_field(p, k);
        uint64_t state = 12345;
        auto rnd = [&] {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            return FqElem{static_cast<uint32_t>((state >> 33) % F.q())};
        };
        for (int i = 0; i < 200; ++i) {
            FqElem a = rnd(), b = rnd(), c = rnd();
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(a, F.neg(a)) == F.zero());
            if (a.v != 0) CHECK(F.mul(a, F.inv(a)) == F.one());
        }
    }
}

TEST_CASE("fifth power counts") {
    FieldCtx F11 = make_field(11, 1);
    CHECK(F11.fifth_power_count(F11.one()) == 5);
    CHECK(F11.fifth_power_count(F11.zero()) == 1);
    FieldCtx F7 = make_field(7, 1);
    CHECK(F7.fifth_power_count(F7.from_int(3)) == 1);  // gcd(5,6)=1, bijection
    CHECK(F7.fifth_power_count(F7.zero()) == 1);
}

TEST_CASE("fifth power map partitions F_q") {
    for (auto [p, k] : {std::pair{11u, 1u}, {3u, 2u}, {7u, 1u}, {31u, 1u}, {3u, 4u}}) {
        FieldCtx F = make_field(p, k);
        long long total = 0;
        for (uint32_t c = 0; c < F.q(); ++c) total += F.fifth_power_count({c});
        CHECK(total == static_cast<long long>(F.q()));
    }
}

TEST_CASE("quadratic root counts match enumeration for q <= 13") {
    for (auto [p, k] : {std::pair{3u, 1u}, {7u, 1u}, {11u, 1u}, {13u, 1u}, {3u, 2u}}) {
        FieldCtx F = make_field(p, k);
        for (uint32_t a2 = 1; a2 < F.q(); ++a2)
            for (uint32_t a1 = 0; a1 < F.q(); ++a1)
                for (uint32_t a0 = 0; a0 < F.q(); ++a0) {
                    int naive = 0;
                    for (uint32_t x = 0; x < F.q(); ++x) {
                        FqElem v = F.add(
                            F.mul(F.mul({a2}, {x}), {x}),
                            F.add(F.mul({a1}, {x}), FqElem{a0}));
                        if (v.v == 0) ++naive;
                    }
                    REQUIRE(F.quadratic_root_count({a2}, {a1}, {a0}) == naive);
                }
    }
}

TEST_CASE("quadratic root count spec examples over F_11") {
    FieldCtx F = make_field(11, 1);
    CHECK(F.quadratic_root_count(F.one(), F.zero(), F.from_int(-1)) == 2);
    CHECK(F.quadratic_root_count(F.one(), F.zero(), F.one()) == 0);
    CHECK(F.quadratic_root_count(F.one(), F.from_int(2), F.one()) == 1);
}

TEST_CASE("embedding commutes with arithmetic") {
    for (auto [p, k, kk] :
         {std::tuple{3u, 1u, 2u}, {7u, 1u, 2u}, {3u, 2u, 4u}, {11u, 1u, 3u}}) {
        FieldCtx Fs = make_field(p, k);
        FieldCtx Fb = make_field(p, kk);
        Embedding e(Fs, Fb);
        uint64_t state = 999;
        auto rnd = [&] {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            return FqElem{static_cast<uint32_t>((state >> 33) % Fs.q())};
        };
        CHECK(e.map(Fs.one()) == Fb.one());
        CHECK(e.map(Fs.zero()) == Fb.zero());
        for (int i = 0; i < 100; ++i) {
            FqElem a = rnd(), b = rnd();
            CHECK(e.map(Fs.add(a, b)) == Fb.add(e.map(a), e.map(b)));
            CHECK(e.map(Fs.mul(a, b)) == Fb.mul(e.map(a), e.map(b)));
        }
        std::set<uint32_t> images;
        for (uint32_t a = 0; a < Fs.q(); ++a) images.insert(e.map({a}).v);
        CHECK(images.size() == Fs.q());
    }
}

TEST_CASE("from_rational and bad reduction") {
    FieldCtx F = make_field(7, 1);
    CHECK(F.from_rational(RationalPsi(1, 2)) == F.from_int(4));  // 2*4 = 1 mod 7
    CHECK_THROWS_AS(F.from_rational(RationalPsi(1, 7)), BadReduction);
    CHECK_THROWS_AS(RationalPsi(3, 3), ConfigError);  // psi = 1
    CHECK(parse_psi("-2/4") == RationalPsi(-1, 2));
}
