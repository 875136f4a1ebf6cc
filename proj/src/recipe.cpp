#include "pdell/recipe.hpp"

#include <numeric>

namespace pdell {

std::string_view to_string(ExampleKind kind) noexcept {
    switch (kind) {
    case ExampleKind::Ex1: return "ex1";
    case ExampleKind::ExP: return "exp";
    case ExampleKind::ExP2: return "exp2";
    }
    return "unknown";
}

std::optional<std::string> recipe_violation(const Recipe& r) {
    if (r.p < 2) return "p must be at least 2";
    if (r.d < 2) return "d must be at least 2";
    if (r.deg_phi < 1 || r.deg_phi_prime < 1) return "isogeny degrees must be positive";
    if (r.m != r.nu * r.deg_phi) return "m must equal nu * deg(phi)";
    if (r.p * r.d - r.m != r.nu * r.deg_phi_prime) return "pd - m must equal nu * deg(phi')";
    const auto sum = r.deg_phi + r.deg_phi_prime;
    switch (r.kind) {
    case ExampleKind::Ex1:
        if (r.nu != 1) return "ex1 requires nu = 1";
        if (sum != r.p * r.d) return "ex1 requires deg(phi) + deg(phi') = pd";
        if (std::gcd(r.p, r.deg_phi) != 1) return "ex1 requires gcd(p, deg(phi)) = 1";
        break;
    case ExampleKind::ExP:
        if (r.nu != r.p) return "exp requires nu = p";
        if (sum != r.d) return "exp requires deg(phi) + deg(phi') = d";
        break;
    case ExampleKind::ExP2:
        if (r.nu != r.p * r.p) return "exp2 requires nu = p^2";
        if (r.d % r.p != 0) return "exp2 requires p | d";
        if (sum * r.p != r.d) return "exp2 requires deg(phi) + deg(phi') = d / p";
        break;
    }
    return std::nullopt;
}

} // namespace pdell
