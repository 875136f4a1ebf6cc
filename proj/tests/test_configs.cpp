#include "doctest.h"
#include "oracles.hpp"

#include "pdell/configs.hpp"

using namespace pdell;

namespace {

ProjLine line(std::array<std::int64_t, 4> a, std::array<std::int64_t, 4> b, std::uint32_t p) {
    return ProjLine(TorsionVector(a, Prime(p)), TorsionVector(b, Prime(p)));
}

// Isotropic graphs through v other than t, straight from the definitions.
std::size_t brute_exp(std::uint32_t p, const ProjLine& t, const ProjPoint& v) {
    static std::map<std::uint32_t, std::vector<oracle::PointSet>> cache;
    if (!cache.count(p)) cache[p] = oracle::lines(p);
    std::size_t n = 0;
    const auto r = oracle::r_set(p), s = oracle::s_set(p), st = oracle::as_set(t);
    for (const auto& l : cache[p])
        if (l != st && std::binary_search(l.begin(), l.end(), v.representative().coords) && oracle::isotropic(l, p) &&
            !oracle::meets(l, r) && !oracle::meets(l, s))
            ++n;
    return n;
}

} // namespace

TEST_SUITE("configs") {

TEST_CASE("validate_ex1") {
    auto ok = validate_ex1(2, 3, {1, 5});
    REQUIRE(std::holds_alternative<Recipe>(ok));
    CHECK(std::get<Recipe>(ok) == Recipe{ExampleKind::Ex1, 2, 3, 1, 1, 1, 5});
    auto three = validate_ex1(2, 3, {3, 3});
    REQUIRE(std::holds_alternative<Recipe>(three));
    CHECK(std::get<Recipe>(three).m == 3);

    auto kind_of = [](const std::variant<Recipe, Violation>& v) { return std::get<Violation>(v).kind; };
    CHECK(kind_of(validate_ex1(2, 3, {2, 4})) == Violation::Kind::Coprimality);
    CHECK(kind_of(validate_ex1(2, 3, {1, 4})) == Violation::Kind::DegreeSum);
    CHECK(kind_of(validate_ex1(2, 3, {0, 6})) == Violation::Kind::NonPositiveDegree);
    CHECK(kind_of(validate_ex1(1, 3, {1, 2})) == Violation::Kind::DegreeRange);
    CHECK(kind_of(validate_ex1(2, 1, {1, 1})) == Violation::Kind::DegreeRange);
    CHECK_FALSE(std::get<Violation>(validate_ex1(2, 3, {2, 4})).message.empty());
    CHECK(std::holds_alternative<Recipe>(validate_ex1(4, 3, {3, 9})));
}

TEST_CASE("position of t from the degrees") {
    const TPosition skew{LineRelation::Skew, LineRelation::Skew};
    CHECK(t_position(Prime(2), {1, 5}) == skew);
    CHECK(t_position(Prime(2), {2, 4}) == TPosition{LineRelation::Meet, LineRelation::Meet});
    CHECK(t_position(Prime(3), {1, 5}) == skew);
    CHECK(t_position(Prime(2), {2, 1}) == TPosition{LineRelation::Skew, LineRelation::Meet});
    CHECK(t_position(Prime(2), {1, 2}) == TPosition{LineRelation::Meet, LineRelation::Skew});
    CHECK(t_is_isotropic(Prime(2), {1, 5}));
    CHECK_FALSE(t_is_isotropic(Prime(2), {1, 2}));
    CHECK(t_is_isotropic(Prime(3), {1, 2}));
}

TEST_CASE("witness lines realize every consistent position") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Prime P(p);
        const auto r = line_r(P), s = line_s(P);
        for (auto rr : {LineRelation::Equal, LineRelation::Meet, LineRelation::Skew})
            for (auto rs : {LineRelation::Equal, LineRelation::Meet, LineRelation::Skew})
                for (bool iso : {false, true}) {
                    // An isotropic line meeting one of r, s meets the other; neither r nor s is isotropic.
                    const bool possible = !(rr == LineRelation::Equal && rs != LineRelation::Skew) &&
                                          !(rs == LineRelation::Equal && rr != LineRelation::Skew) &&
                                          !(iso && (rr == LineRelation::Equal || rs == LineRelation::Equal)) &&
                                          !(iso && ((rr == LineRelation::Skew) != (rs == LineRelation::Skew))) &&
                                          !(!iso && rr == LineRelation::Meet && rs == LineRelation::Meet) &&
                                          !(!iso && p == 2 && rr == LineRelation::Skew && rs == LineRelation::Skew);
                    const TPosition pos{rr, rs};
                    if (!possible) {
                        CHECK_THROWS_AS(witness_line(P, pos, iso), Error);
                        continue;
                    }
                    const auto t = witness_line(P, pos, iso);
                    CHECK(line_relation(t, r) == rr);
                    CHECK(line_relation(t, s) == rs);
                    CHECK(is_isotropic(t) == iso);
                }
    }
}

TEST_CASE("the impossible positions really are empty") {
    for (std::uint32_t p : {2u, 3u}) {
        const auto r = line_r(Prime(p)), s = line_s(Prime(p));
        for (const auto& l : enumerate_lines(Prime(p))) {
            const bool mr = lines_meet(l, r), ms = lines_meet(l, s);
            if (is_isotropic(l)) REQUIRE(mr == ms);
            if (mr && ms && l != r && l != s) REQUIRE(is_isotropic(l));
        }
    }
}

TEST_CASE("scenarios") {
    CHECK(to_string(Scenario::BothOdd) == "both-odd");
    CHECK(to_string(Side::S) == "s");
    for (auto sc : {Scenario::BothOdd, Scenario::BothEven, Scenario::EqualLine, Scenario::CoplanarDistinct})
        for (auto side : {Side::R, Side::S}) {
            const auto t = scenario_witness(Prime(2), sc, side);
            const auto pos = scenario_position(sc, side);
            CHECK(line_relation(t, line_r(Prime(2))) == pos.rel_r);
            CHECK(line_relation(t, line_s(Prime(2))) == pos.rel_s);
        }
    CHECK(scenario_position(Scenario::EqualLine, Side::R).rel_r == LineRelation::Equal);
    CHECK(scenario_position(Scenario::CoplanarDistinct, Side::S) == TPosition{LineRelation::Skew, LineRelation::Meet});
}

TEST_CASE("graphs skew to t, p = 2 scenario counts") {
    const Prime p(2);
    const std::vector<std::pair<Scenario, std::size_t>> want{{Scenario::BothOdd, 2},
                                                             {Scenario::BothEven, 4},
                                                             {Scenario::EqualLine, 6},
                                                             {Scenario::CoplanarDistinct, 2}};
    for (const auto& [sc, n] : want)
        for (auto side : {Side::R, Side::S}) {
            const auto t = scenario_witness(p, sc, side);
            const auto hs = enumerate_H_exp2(p, t);
            CHECK(hs.size() == n);
            // Over F_2 these are exactly the lines avoiding r, s and t.
            const auto st = oracle::as_set(t);
            std::size_t disjoint = 0;
            for (const auto& l : oracle::lines(2))
                if (!oracle::meets(l, oracle::r_set(2)) && !oracle::meets(l, oracle::s_set(2)) && !oracle::meets(l, st))
                    ++disjoint;
            CHECK(disjoint == n);
        }
}

TEST_CASE("graphs skew to t are isotropic graphs, p <= 5") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Prime P(p);
        for (int trial = 0; trial < (p == 5 ? 6 : 20); ++trial) {
            const auto t = line_at(P, static_cast<std::uint64_t>(oracle::uniform(0, line_count(P) - 1)));
            std::size_t expected = 0;
            for (const auto& l : enumerate_lines(P))
                if (is_isotropic(l) && is_graph(l) && !lines_meet(l, t)) ++expected;
            const auto hs = enumerate_H_exp2(P, t);
            REQUIRE(hs.size() == expected);
            for (const auto& h : hs) {
                REQUIRE(is_isotropic(h.line));
                REQUIRE(line_to_alpha(h.line) == h.alpha);
                REQUIRE(is_antisymplectic(h.alpha));
                REQUIRE(line_relation(h.line, t) == LineRelation::Skew);
            }
        }
    }
}

TEST_CASE("lower bound for t skew to r and s, p = 3, 5") {
    for (std::uint32_t p : {3u, 5u}) {
        const Prime P(p);
        const std::int64_t q = p, bound = (q + 1) * (q * q + 1) - 2 * (q + 1) * (q + 1);
        REQUIRE(bound > 0);
        const auto skews = collect_lines(P, [](const ProjLine& l) { return is_graph(l); });
        std::size_t checked = 0;
        for (std::size_t i = 0; i < skews.size(); i += (p == 5 ? 97 : 1)) {
            REQUIRE(static_cast<std::int64_t>(enumerate_H_exp2(P, skews[i]).size()) >= bound);
            ++checked;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("isotropic graphs through v other than t") {
    const Prime p2(2);
    // t skew to r and s: over F_2 t is one of the three isotropic lines through v.
    const auto t_skew = scenario_witness(p2, Scenario::BothOdd);
    for (const auto& v : t_skew.points()) CHECK(enumerate_H_exp(p2, t_skew, v).size() == 1);
    // t meeting r only.
    const auto t_r = witness_line(p2, {LineRelation::Meet, LineRelation::Skew}, false);
    std::size_t valid = 0;
    for (const auto& v : t_r.points()) {
        if (line_r(p2).contains(v) || line_s(p2).contains(v)) continue;
        ++valid;
        CHECK(enumerate_H_exp(p2, t_r, v).size() == 2);
    }
    CHECK(valid == 2);

    for (std::uint32_t p : {2u, 3u}) {
        const Prime P(p);
        const auto r = line_r(P), s = line_s(P);
        for (const auto& t : enumerate_lines(P)) {
            if (t == r || t == s) continue;
            for (const auto& v : t.points()) {
                if (r.contains(v) || s.contains(v)) continue;
                const auto hs = enumerate_H_exp(P, t, v);
                REQUIRE(hs.size() == brute_exp(p, t, v));
                if (p > 2) REQUIRE(!hs.empty());
                for (const auto& h : hs) {
                    REQUIRE(h.line.contains(v));
                    REQUIRE(h.line != t);
                    REQUIRE(is_isotropic(h.line));
                    REQUIRE(is_antisymplectic(line_to_alpha(h.line)));
                }
            }
        }
    }
}

TEST_CASE("witness preconditions") {
    const Prime p(2);
    const auto t = line({1, 0, 0, 0}, {0, 1, 1, 0}, 2);
    auto code = [&](const ProjLine& tt, const ProjPoint& v) {
        try {
            enumerate_H_exp(p, tt, v);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code(t, ProjPoint(TorsionVector({1, 0, 0, 0}, p))) == ErrorCode::InvalidWitness);
    CHECK(code(t, ProjPoint(TorsionVector({0, 0, 0, 1}, p))) == ErrorCode::InvalidWitness);
    CHECK(code(line_r(p), ProjPoint(TorsionVector({1, 1, 0, 0}, p))) == ErrorCode::InvalidWitness);
    CHECK(code(t, ProjPoint(TorsionVector({1, 1, 1, 1}, p))) == ErrorCode::InvalidWitness);
}

TEST_CASE("degree of the induced map") {
    CHECK(fbar_theta_degree(Prime(2), 1, {1, 5}) == 3);
    CHECK(fbar_theta_degree(Prime(2), 2, {1, 2}) == 3);
    CHECK(fbar_theta_degree(Prime(2), 4, {1, 1}) == 4);
    CHECK(fbar_theta_degree(Prime(3), 9, {1, 1}) == 6);
    auto code = [](std::int64_t p, std::int64_t nu, IsogenyDatum iso) {
        try {
            fbar_theta_degree(Prime(p), nu, iso);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code(2, 1, {1, 2}) == ErrorCode::Inconsistent);
    CHECK(code(2, 3, {1, 2}) == ErrorCode::Inconsistent);
}

}
