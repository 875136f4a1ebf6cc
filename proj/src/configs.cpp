#include "pdell/configs.hpp"

#include <algorithm>
#include <numeric>

namespace pdell {

namespace {

bool meets(LineRelation rel) { return rel != LineRelation::Skew; }

TorsionVector vec(std::array<std::int64_t, 4> c, Prime p) { return TorsionVector(c, p); }

std::vector<GraphLine> as_graphs(const std::vector<ProjLine>& lines) {
    std::vector<GraphLine> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back({l, line_to_alpha(l)});
    return out;
}

} // namespace

std::string_view to_string(Violation::Kind kind) noexcept {
    switch (kind) {
    case Violation::Kind::DegreeRange: return "degree_range";
    case Violation::Kind::NonPositiveDegree: return "non_positive_degree";
    case Violation::Kind::DegreeSum: return "degree_sum";
    case Violation::Kind::Coprimality: return "coprimality";
    }
    return "unknown";
}

std::variant<Recipe, Violation> validate_ex1(std::int64_t n, std::int64_t d, const IsogenyDatum& iso) {
    using K = Violation::Kind;
    if (n < 2 || d < 2) return Violation{K::DegreeRange, "n and d must be at least 2"};
    if (iso.deg_phi < 1 || iso.deg_phi_prime < 1)
        return Violation{K::NonPositiveDegree, "isogeny degrees must be positive"};
    if (iso.sum() != n * d)
        return Violation{K::DegreeSum, "deg(phi) + deg(phi') = " + std::to_string(iso.sum()) +
                                           " but nd = " + std::to_string(n * d)};
    if (std::gcd(n, iso.deg_phi) != 1)
        return Violation{K::Coprimality, "gcd(n, deg(phi)) = " + std::to_string(std::gcd(n, iso.deg_phi))};
    return Recipe{ExampleKind::Ex1, n, d, iso.deg_phi, 1, iso.deg_phi, iso.deg_phi_prime};
}

TPosition t_position(Prime p, const IsogenyDatum& iso) {
    const std::int64_t q = p.value();
    return {iso.deg_phi_prime % q == 0 ? LineRelation::Meet : LineRelation::Skew,
            iso.deg_phi % q == 0 ? LineRelation::Meet : LineRelation::Skew};
}

bool t_is_isotropic(Prime p, const IsogenyDatum& iso) { return iso.sum() % p.value() == 0; }

ProjLine witness_line(Prime p, const TPosition& pos, bool isotropic) {
    auto fail = [&](const char* why) -> ProjLine {
        throw Error(ErrorCode::Inconsistent, std::string("no witness line: ") + why);
    };
    const auto r = pos.rel_r, s = pos.rel_s;
    if (r == LineRelation::Equal || s == LineRelation::Equal) {
        if (r == LineRelation::Equal && s == LineRelation::Equal) return fail("t cannot equal both r and s");
        if (meets(r) && meets(s)) return fail("r and s are skew, so t = r cannot meet s");
        if (isotropic) return fail("r and s are not isotropic");
        return r == LineRelation::Equal ? line_r(p) : line_s(p);
    }
    if (meets(r) && meets(s)) {
        // Every line joining a point of r to a point of s is isotropic.
        if (!isotropic) return fail("a line meeting r and s is isotropic");
        return ProjLine(vec({1, 0, 0, 0}, p), vec({0, 0, 1, 0}, p));
    }
    if (meets(r) || meets(s)) {
        // An isotropic line through a point of r lies in its annihilator, which contains s.
        if (isotropic) return fail("an isotropic line meeting one of r, s meets the other");
        if (meets(r)) return ProjLine(vec({1, 0, 0, 0}, p), vec({0, 1, 1, 0}, p));
        return ProjLine(vec({0, 0, 1, 0}, p), vec({1, 0, 0, 1}, p));
    }
    if (isotropic) return graph_line(AlphaMap({1, 0, 0, -1}, p)).line;
    if (p.value() == 2) return fail("over F_2 every graph is isotropic");
    return graph_line(AlphaMap::identity(p)).line;
}

std::string_view to_string(Scenario s) noexcept {
    switch (s) {
    case Scenario::BothOdd: return "both-odd";
    case Scenario::BothEven: return "both-even";
    case Scenario::EqualLine: return "equal";
    case Scenario::CoplanarDistinct: return "coplanar";
    }
    return "unknown";
}

std::string_view to_string(Side s) noexcept { return s == Side::R ? "r" : "s"; }

TPosition scenario_position(Scenario scenario, Side side) {
    using LR = LineRelation;
    switch (scenario) {
    case Scenario::BothOdd: return {LR::Skew, LR::Skew};
    case Scenario::BothEven: return {LR::Meet, LR::Meet};
    case Scenario::EqualLine: return side == Side::R ? TPosition{LR::Equal, LR::Skew} : TPosition{LR::Skew, LR::Equal};
    case Scenario::CoplanarDistinct:
        return side == Side::R ? TPosition{LR::Meet, LR::Skew} : TPosition{LR::Skew, LR::Meet};
    }
    return {};
}

ProjLine scenario_witness(Prime p, Scenario scenario, Side side) {
    const auto pos = scenario_position(scenario, side);
    // Matches t_is_isotropic: only the both-odd and both-even cases have p | deg(phi) + deg(phi') at p = 2.
    const bool isotropic = scenario == Scenario::BothOdd || scenario == Scenario::BothEven;
    return witness_line(p, pos, isotropic);
}

std::vector<GraphLine> enumerate_H_exp(Prime p, const ProjLine& t, const ProjPoint& v) {
    const auto r = line_r(p), s = line_s(p);
    if (t.modulus() != p.value() || v.modulus() != p.value())
        throw Error(ErrorCode::ModulusMismatch, "witness data over a different field");
    if (!t.contains(v)) throw Error(ErrorCode::InvalidWitness, "v does not lie on t");
    if (r.contains(v) || s.contains(v)) throw Error(ErrorCode::InvalidWitness, "v lies in ker(phi) or ker(phi')");
    if (t == r || t == s) throw Error(ErrorCode::InvalidWitness, "F[p] is contained in ker(phi) or ker(phi')");
    return as_graphs(collect_lines(p, [&](const ProjLine& l) {
        return l.contains(v) && l != t && is_isotropic(l) && is_graph(l);
    }));
}

std::vector<GraphLine> enumerate_H_exp2(Prime p, const ProjLine& t) {
    if (t.modulus() != p.value()) throw Error(ErrorCode::ModulusMismatch, "t is over a different field");
    return as_graphs(collect_lines(p, [&](const ProjLine& l) {
        return is_isotropic(l) && is_graph(l) && intersection_dimension(l, t) == 0;
    }));
}

std::int64_t fbar_theta_degree(Prime p, std::int64_t nu, const IsogenyDatum& iso) {
    const std::int64_t q = p.value();
    if (nu != 1 && nu != q && nu != q * q)
        throw Error(ErrorCode::Inconsistent, "nu must be 1, p or p^2");
    if (iso.deg_phi < 1 || iso.deg_phi_prime < 1)
        throw Error(ErrorCode::Inconsistent, "isogeny degrees must be positive");
    const auto num = nu * iso.sum();
    if (num % q != 0)
        throw Error(ErrorCode::Inconsistent, "nu * (deg(phi) + deg(phi')) = " + std::to_string(num) +
                                                 " is not divisible by p");
    return num / q;
}

} // namespace pdell
