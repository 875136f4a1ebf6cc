#pragma once

// Torsion-level shadows of the three constructions: the line t = P(F[p]) and
// its position relative to r = P(E[p] x 0) and s = P(0 x E'[p]).

#include "pdell/alpha.hpp"
#include "pdell/recipe.hpp"

#include <string>
#include <variant>
#include <vector>

namespace pdell {

/// Degrees of phi: F -> E and phi': F -> E', with ker phi cap ker phi' = 0.
struct IsogenyDatum {
    std::int64_t deg_phi = 1;
    std::int64_t deg_phi_prime = 1;

    std::int64_t sum() const noexcept { return deg_phi + deg_phi_prime; }
};

struct Violation {
    enum class Kind { DegreeRange, NonPositiveDegree, DegreeSum, Coprimality };
    Kind kind;
    std::string message;
};

std::string_view to_string(Violation::Kind kind) noexcept;

std::variant<Recipe, Violation> validate_ex1(std::int64_t n, std::int64_t d, const IsogenyDatum& iso);

struct TPosition {
    LineRelation rel_r = LineRelation::Skew;
    LineRelation rel_s = LineRelation::Skew;

    friend bool operator==(const TPosition&, const TPosition&) = default;
};

/// t meets s iff p | deg(phi); t meets r iff p | deg(phi'). Returns Meet, never Equal.
TPosition t_position(Prime p, const IsogenyDatum& iso);

/// The Weil pairing restricts to F[p] as e^(deg phi + deg phi'), so t is isotropic iff p divides the sum.
bool t_is_isotropic(Prime p, const IsogenyDatum& iso);

/// A canonical line t with the given position and isotropy. Throws Inconsistent when
/// no such line exists (e.g. an isotropic line meeting r but not s).
ProjLine witness_line(Prime p, const TPosition& pos, bool isotropic);

/// Case labels of the p = 2 analysis.
enum class Scenario { BothOdd, BothEven, EqualLine, CoplanarDistinct };
/// Which of r, s the line t coincides with or meets in the asymmetric scenarios.
enum class Side { R, S };

std::string_view to_string(Scenario s) noexcept;
std::string_view to_string(Side s) noexcept;

TPosition scenario_position(Scenario scenario, Side side = Side::R);
ProjLine scenario_witness(Prime p, Scenario scenario, Side side = Side::R);

/// Isotropic graph lines through v other than t. Requires v on t, v outside r and s,
/// and t distinct from r and s; otherwise InvalidWitness.
std::vector<GraphLine> enumerate_H_exp(Prime p, const ProjLine& t, const ProjPoint& v);

/// Isotropic graph lines skew to t.
std::vector<GraphLine> enumerate_H_exp2(Prime p, const ProjLine& t);

/// nu * (deg phi + deg phi') / p, the degree of the induced map onto D. Inconsistent when not integral.
std::int64_t fbar_theta_degree(Prime p, std::int64_t nu, const IsogenyDatum& iso);

} // namespace pdell
