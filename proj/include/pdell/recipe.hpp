#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pdell {

/// Which construction produces the configuration; nu is 1, p, p^2 respectively.
enum class ExampleKind { Ex1, ExP, ExP2 };

std::string_view to_string(ExampleKind kind) noexcept;

/// Discrete data of one construction. For Ex1 over a composite degree, p holds n.
struct Recipe {
    ExampleKind kind = ExampleKind::Ex1;
    std::int64_t p = 2;
    std::int64_t d = 2;
    std::int64_t m = 1;
    std::int64_t nu = 1;
    std::int64_t deg_phi = 1;
    std::int64_t deg_phi_prime = 1;

    friend bool operator==(const Recipe&, const Recipe&) = default;
};

/// First violated recipe invariant, or nullopt when the recipe is consistent.
std::optional<std::string> recipe_violation(const Recipe& r);

} // namespace pdell
