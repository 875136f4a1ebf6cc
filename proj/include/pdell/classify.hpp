#pragma once

// Which constructions can realize a non-trivial (p, d)-elliptic configuration
// with twisting number m.

#include "pdell/configs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pdell {

struct ClassifyOutcome {
    enum class Kind { Trivial, Invalid, Recipes };

    Kind kind = Kind::Invalid;
    std::string reason;           // set for Invalid
    std::vector<Recipe> recipes;  // nonempty for Recipes
};

std::string_view to_string(ClassifyOutcome::Kind kind) noexcept;

/// m = pd is the complementary map; 1 <= m < pd lists every admissible recipe.
/// Throws InvalidModulus when p is not prime.
ClassifyOutcome classify(std::int64_t p, std::int64_t d, std::int64_t m);

/// classify(2, 3, m).
ClassifyOutcome classify_bitri(std::int64_t m);

/// The recipe of the given kind with these isogeny degrees: d is (sum) / p, sum, or p * sum
/// for ex1, exp, exp2. Throws Inconsistent naming the first violated condition.
Recipe recipe_from_degrees(ExampleKind kind, std::int64_t p, const IsogenyDatum& iso);

/// A scenario position is compatible with the degree rule when Skew matches Skew and
/// Meet matches Meet or Equal.
bool position_compatible(const TPosition& rule, const TPosition& chosen);

struct RealizeWitness {
    Recipe recipe;
    ProjLine t;
    TPosition position;
    std::optional<ProjPoint> v;  // the point of H cap t for exp
    std::size_t count = 0;
    std::optional<GraphLine> sample;
    std::int64_t sample_meet_order = 0;  // |sample cap t| as a group, p^2 / nu
};

/// Builds the torsion-level scenario for a recipe over a prime p and counts the admissible H.
RealizeWitness realize(const Recipe& recipe);
/// Same, with the caller choosing t (e.g. a scenario witness); t must avoid r and s where the recipe requires it.
RealizeWitness realize(const Recipe& recipe, const ProjLine& t);

/// Same, with t the witness of a p = 2 style scenario. Tries the given side, or r then s,
/// and throws Inconsistent when no orientation matches the degree rule.
RealizeWitness realize(const Recipe& recipe, Scenario scenario, std::optional<Side> side = std::nullopt);

} // namespace pdell
