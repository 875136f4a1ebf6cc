#include "doctest.h"
#include "oracles.hpp"

#include "pdell/cmorders.hpp"

#include <algorithm>

using namespace pdell;

TEST_SUITE("cmorders") {

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly({2, 2, 1}) == std::array<std::int64_t, 3>{1, -2, 2});
    CHECK(char_poly({0, 2, 1}) == std::array<std::int64_t, 3>{1, 0, 2});
    CHECK(char_poly({-1, 2, -1}) == std::array<std::int64_t, 3>{1, 1, 2});
    CHECK(eval_char_poly({2, 2, 1}, 1) == 1);
}

TEST_CASE("twisting numbers") {
    CHECK(twisting_number({-2, 2, 1}) == 1);
    CHECK(twisting_number({0, 2, 1}) == 3);
    CHECK(twisting_number({1, 2, -1}) == 4);
    for (std::int64_t t = -2; t <= 2; ++t) CHECK(twisting_number({t, 2, 1}) == eval_char_poly({t, 2, 1}, -1));
    CHECK_THROWS_AS(twisting_number({0, 3, 1}), Error);
}

TEST_CASE("norm-2 integral elements are exactly traces -2..2") {
    for (std::int64_t t = -6; t <= 6; ++t) {
        const QuadEndo xi{t, 2, 1};
        const bool nonreal = xi.discriminant() < 0;
        CHECK(nonreal == (t >= -2 && t <= 2));
        CHECK(nonreal == (3 + t >= 1 && 3 + t <= 5));
    }
}

TEST_CASE("the ten degree-2 endomorphisms") {
    const auto entries = enumerate_degree2();
    REQUIRE(entries.size() == 10);
    std::vector<std::int64_t> ms, discs;
    for (const auto& e : entries) {
        ms.push_back(e.m);
        discs.push_back(e.order.discriminant);
        CHECK(e.m == twisting_number(e.xi));
        CHECK(e.m == index_oracle(e.xi));
        CHECK(e.xi.discriminant() == e.order.discriminant);
        CHECK(is_fundamental_discriminant(e.xi.discriminant()));
        CHECK(e.order.name == order_of(e.xi).name);
    }
    CHECK(ms == std::vector<std::int64_t>{1, 1, 2, 2, 3, 3, 4, 4, 5, 5});
    std::sort(discs.begin(), discs.end());
    CHECK(discs == std::vector<std::int64_t>{-8, -8, -7, -7, -7, -7, -4, -4, -4, -4});
    for (std::size_t i = 0; i < 10; i += 2) {
        CHECK(entries[i].xi.trace == entries[i + 1].xi.trace);
        CHECK(entries[i].xi.im_sign == -entries[i + 1].xi.im_sign);
        CHECK(entries[i].order.name == entries[i + 1].order.name);
    }
    CHECK(entries[8].order.name == "Z[i]");
    CHECK(entries[8].xi.trace == 2);
    CHECK(entries[2].xi.trace == -1);
    CHECK(entries[2].order.name == "Z[(1+i*sqrt(7))/2]");
    CHECK(entries[4].order.name == "Z[i*sqrt(2)]");
}

TEST_CASE("multiplication matrices and the lattice index") {
    CHECK(multiplication_matrix({-2, 2, 1}) == std::array<std::int64_t, 4>{-1, -1, 1, -1});
    CHECK(index_oracle({-2, 2, 1}) == 1);
    CHECK(index_oracle({0, 2, 1}) == 3);
    CHECK(index_oracle({2, 2, -1}) == 5);
    for (const auto& e : enumerate_degree2()) {
        auto m = multiplication_matrix(e.xi);
        const auto& o = order_of(e.xi);
        // M represents xi: its characteristic polynomial is that of xi.
        CHECK(m[0] + m[3] == e.xi.trace);
        CHECK(m[0] * m[3] - m[1] * m[2] == e.xi.norm);
        // The column of w is w * xi expressed in (1, w), consistent with w^2 = s w - q.
        CHECK(o.w_trace * o.w_trace - 4 * o.w_norm == o.discriminant);
        m[0] += 1;
        m[3] += 1;
        CHECK(oracle::lattice_index(m, 5) == e.m);
    }
}

TEST_CASE("descriptions") {
    CHECK(describe({-2, 2, 1}) == "-1+i");
    CHECK(describe({2, 2, -1}) == "1-i");
    CHECK(describe({0, 2, 1}) == "i*sqrt(2)");
    CHECK(describe({0, 2, -1}) == "-i*sqrt(2)");
    CHECK(describe({-1, 2, 1}) == "(-1+i*sqrt(7))/2");
    CHECK(describe({1, 2, -1}) == "(1-i*sqrt(7))/2");
}

TEST_CASE("fundamental discriminants") {
    for (std::int64_t d : {-3, -4, -7, -8, -11, 5, 8, 12}) CHECK(is_fundamental_discriminant(d));
    for (std::int64_t d : {-1, -12, -16, 0, 1, 4, 9}) CHECK_FALSE(is_fundamental_discriminant(d));
}

}
