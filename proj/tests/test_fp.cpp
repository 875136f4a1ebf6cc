#include "doctest.h"
#include "oracles.hpp"

#include "pdell/fp.hpp"

using namespace pdell;

TEST_SUITE("fp") {

TEST_CASE("primality and the prime wrapper") {
    for (std::int64_t n : {2, 3, 5, 7, 11, 101, 65521}) CHECK(is_prime(n));
    for (std::int64_t n : {-3, 0, 1, 4, 9, 15, 91, 65535}) CHECK_FALSE(is_prime(n));
    CHECK(Prime(7).value() == 7u);
    try {
        Prime bad(4);
        FAIL("4 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidModulus);
    }
    CHECK_THROWS_AS(Prime(1), Error);
    CHECK_THROWS_AS(Prime(65537), Error);
}

TEST_CASE("enumeration bound") {
    CHECK_NOTHROW(check_enumeration_bound(Prime(101), kDefaultEnumerationBound));
    try {
        check_enumeration_bound(Prime(103), kDefaultEnumerationBound);
        FAIL("103 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
    CHECK_NOTHROW(check_enumeration_bound(Prime(103), 103));
}

TEST_CASE("modular helpers agree with integer arithmetic") {
    for (std::uint32_t p : {2u, 3u, 7u, 65521u}) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto x = oracle::uniform(-1000000, 1000000), y = oracle::uniform(-1000000, 1000000);
            const auto a = modp::reduce(x, p), b = modp::reduce(y, p);
            const auto P = static_cast<std::int64_t>(p);
            CHECK(a == static_cast<std::uint32_t>(((x % P) + P) % P));
            CHECK(modp::add(a, b, p) == modp::reduce(x + y, p));
            CHECK(modp::sub(a, b, p) == modp::reduce(x - y, p));
            CHECK(modp::mul(a, b, p) == modp::reduce((x % P) * (y % P), p));
            CHECK(modp::neg(a, p) == modp::reduce(-x, p));
            if (a != 0) CHECK(modp::mul(a, modp::inv(a, p), p) == 1u);
        }
    }
    CHECK_THROWS_AS(modp::inv(0, 5), Error);
}

TEST_CASE("Fp field operations") {
    const Prime p(7);
    const Fp a(3, p), b(-2, p);
    CHECK(b.value() == 5u);
    CHECK((a + b).value() == 1u);
    CHECK((a - b).value() == 5u);
    CHECK((a * b).value() == 1u);
    CHECK((-a).value() == 4u);
    CHECK((a * a.inverse()).value() == 1u);
    CHECK(Fp(14, p).is_zero());
    CHECK_THROWS_AS(Fp(0, p).inverse(), Error);
    try {
        (void)(Fp(1, Prime(3)) + Fp(1, Prime(5)));
        FAIL("mixed moduli accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ModulusMismatch);
    }
    CHECK_THROWS_AS((void)(Fp(1, Prime(3)) == Fp(1, Prime(5))), Error);
}

TEST_CASE("torsion vectors reduce and add coordinatewise") {
    const Prime p(5);
    const TorsionVector v({6, -1, 10, 3}, p), w({4, 1, 1, 2}, p);
    CHECK(v.coords == std::array<std::uint32_t, 4>{1, 4, 0, 3});
    CHECK((v + w).coords == std::array<std::uint32_t, 4>{0, 0, 1, 0});
    CHECK(v.scaled(2).coords == std::array<std::uint32_t, 4>{2, 3, 0, 1});
    CHECK(v.coord(1).value() == 4u);
    CHECK(v.to_string() == "(1,4,0,3)");
    CHECK_FALSE(v.is_zero());
    CHECK(TorsionVector({5, 0, 0, 10}, p).is_zero());
    CHECK_THROWS_AS(v + TorsionVector({1, 0, 0, 0}, Prime(3)), Error);
}

TEST_CASE("the product form is alternating and non-degenerate: exhaustive p = 2, 3") {
    for (std::uint32_t p : {2u, 3u}) {
        const auto vs = oracle::nonzero_vectors(p);
        for (const auto& x : vs) {
            CHECK(symplectic_raw(x, x, p) == 0u);
            bool paired = false;
            for (const auto& y : vs) {
                const auto xy = symplectic_raw(x, y, p), yx = symplectic_raw(y, x, p);
                REQUIRE(xy == modp::neg(yx, p));
                REQUIRE(xy == oracle::omega(x, y, p));
                paired = paired || xy != 0;
            }
            CHECK(paired);
        }
    }
}

TEST_CASE("the product form is bilinear and alternating: sampled p = 5, 7, 101") {
    for (std::uint32_t p : {5u, 7u, 101u}) {
        const Prime P(p);
        auto vec = [&] {
            return TorsionVector({oracle::uniform(0, p - 1), oracle::uniform(0, p - 1), oracle::uniform(0, p - 1),
                                  oracle::uniform(0, p - 1)},
                                 P);
        };
        for (int trial = 0; trial < 300; ++trial) {
            const auto x = vec(), y = vec(), z = vec();
            const auto k = static_cast<std::uint32_t>(oracle::uniform(0, p - 1));
            CHECK(symplectic_form(x, x).is_zero());
            CHECK(symplectic_form(x, y) == -symplectic_form(y, x));
            CHECK(symplectic_form(x + y, z) == symplectic_form(x, z) + symplectic_form(y, z));
            CHECK(symplectic_form(x.scaled(k), y) == Fp(k, P) * symplectic_form(x, y));
            CHECK(symplectic_form(x, y).value() == oracle::omega(x.coords, y.coords, p));
        }
    }
}

}
