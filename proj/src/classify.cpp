#include "pdell/classify.hpp"

namespace pdell {

std::string_view to_string(ClassifyOutcome::Kind kind) noexcept {
    switch (kind) {
    case ClassifyOutcome::Kind::Trivial: return "trivial";
    case ClassifyOutcome::Kind::Invalid: return "invalid";
    case ClassifyOutcome::Kind::Recipes: return "recipes";
    }
    return "unknown";
}

namespace {

ClassifyOutcome invalid(std::string why) {
    ClassifyOutcome out;
    out.kind = ClassifyOutcome::Kind::Invalid;
    out.reason = std::move(why);
    return out;
}

} // namespace

ClassifyOutcome classify(std::int64_t p_raw, std::int64_t d, std::int64_t m) {
    const std::int64_t p = Prime(p_raw).value();
    if (d < 2) return invalid("d must be at least 2");
    const auto pd = p * d;
    if (m < 1) return invalid("twisting number must be positive");
    if (m > pd) return invalid("twisting number exceeds pd = " + std::to_string(pd));
    if (m == pd) {
        ClassifyOutcome out;
        out.kind = ClassifyOutcome::Kind::Trivial;
        return out;
    }

    std::vector<Recipe> recipes;
    if (m % p != 0) {
        recipes.push_back({ExampleKind::Ex1, p, d, m, 1, m, pd - m});
    } else {
        const auto mu = m / p;
        if (mu >= 1 && mu <= d - 1) recipes.push_back({ExampleKind::ExP, p, d, m, p, mu, d - mu});
        if (m % (p * p) == 0 && d % p == 0) {
            const auto lambda = m / (p * p), delta = d / p;
            if (lambda >= 1 && lambda <= delta - 1)
                recipes.push_back({ExampleKind::ExP2, p, d, m, p * p, lambda, delta - lambda});
        }
    }
    if (recipes.empty()) return invalid("no construction realizes m = " + std::to_string(m));
    ClassifyOutcome out;
    out.kind = ClassifyOutcome::Kind::Recipes;
    out.recipes = std::move(recipes);
    return out;
}

ClassifyOutcome classify_bitri(std::int64_t m) { return classify(2, 3, m); }

namespace {

Prime recipe_prime(const Recipe& recipe) {
    if (auto why = recipe_violation(recipe)) throw Error(ErrorCode::Inconsistent, *why);
    if (!is_prime(recipe.p))
        throw Error(ErrorCode::OutOfScope, "torsion geometry is modeled for prime p only");
    return Prime(recipe.p);
}

TPosition position_of(const ProjLine& t) {
    const Prime p(t.modulus());
    return {line_relation(t, line_r(p)), line_relation(t, line_s(p))};
}

} // namespace

Recipe recipe_from_degrees(ExampleKind kind, std::int64_t p, const IsogenyDatum& iso) {
    if (iso.deg_phi < 1 || iso.deg_phi_prime < 1)
        throw Error(ErrorCode::Inconsistent, "isogeny degrees must be positive");
    Recipe r;
    switch (kind) {
    case ExampleKind::Ex1: {
        if (iso.sum() % p != 0)
            throw Error(ErrorCode::Inconsistent, "ex1 needs p | deg(phi) + deg(phi')");
        auto v = validate_ex1(p, iso.sum() / p, iso);
        if (auto* bad = std::get_if<Violation>(&v)) throw Error(ErrorCode::Inconsistent, bad->message);
        return std::get<Recipe>(v);
    }
    case ExampleKind::ExP:
        r = {kind, p, iso.sum(), p * iso.deg_phi, p, iso.deg_phi, iso.deg_phi_prime};
        break;
    case ExampleKind::ExP2:
        r = {kind, p, p * iso.sum(), p * p * iso.deg_phi, p * p, iso.deg_phi, iso.deg_phi_prime};
        break;
    }
    if (auto why = recipe_violation(r)) throw Error(ErrorCode::Inconsistent, *why);
    return r;
}

bool position_compatible(const TPosition& rule, const TPosition& chosen) {
    auto ok = [](LineRelation want, LineRelation got) {
        return want == LineRelation::Skew ? got == LineRelation::Skew : got != LineRelation::Skew;
    };
    return ok(rule.rel_r, chosen.rel_r) && ok(rule.rel_s, chosen.rel_s);
}

RealizeWitness realize(const Recipe& recipe) {
    const Prime p = recipe_prime(recipe);
    const IsogenyDatum iso{recipe.deg_phi, recipe.deg_phi_prime};
    return realize(recipe, witness_line(p, t_position(p, iso), t_is_isotropic(p, iso)));
}

RealizeWitness realize(const Recipe& recipe, const ProjLine& t) {
    const Prime p = recipe_prime(recipe);
    if (t.modulus() != p.value()) throw Error(ErrorCode::ModulusMismatch, "t is over a different field");

    RealizeWitness w{recipe, t, position_of(t), std::nullopt, 0, std::nullopt, 0};
    std::vector<GraphLine> hs;
    switch (recipe.kind) {
    case ExampleKind::Ex1:
        // H = F[p] = t itself, which must be an isotropic graph.
        if (!is_isotropic(t) || !is_graph(t))
            throw Error(ErrorCode::Inconsistent, "ex1 needs t to be an isotropic graph");
        hs.push_back({t, line_to_alpha(t)});
        break;
    case ExampleKind::ExP: {
        const auto r = line_r(p), s = line_s(p);
        for (const auto& pt : t.points()) {
            if (!r.contains(pt) && !s.contains(pt)) {
                w.v = pt;
                break;
            }
        }
        if (!w.v) throw Error(ErrorCode::InvalidWitness, "every point of t lies on r or s");
        hs = enumerate_H_exp(p, t, *w.v);
        break;
    }
    case ExampleKind::ExP2:
        hs = enumerate_H_exp2(p, t);
        break;
    }
    w.count = hs.size();
    if (!hs.empty()) {
        w.sample = hs.front();
        w.sample_meet_order = 1;
        for (int k = 0; k < intersection_dimension(hs.front().line, t); ++k) w.sample_meet_order *= p.value();
    }
    return w;
}

RealizeWitness realize(const Recipe& recipe, Scenario scenario, std::optional<Side> side) {
    const Prime p = recipe_prime(recipe);
    const auto rule = t_position(p, {recipe.deg_phi, recipe.deg_phi_prime});
    std::vector<Side> sides{Side::R, Side::S};
    if (side) sides = {*side};
    for (auto sd : sides)
        if (position_compatible(rule, scenario_position(scenario, sd)))
            return realize(recipe, scenario_witness(p, scenario, sd));
    throw Error(ErrorCode::Inconsistent,
                "scenario " + std::string(to_string(scenario)) + " does not match the isogeny degrees");
}

} // namespace pdell
