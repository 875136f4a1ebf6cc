#pragma once

// Isomorphisms E[p] -> E'[p] as invertible 2x2 matrices and their graphs.

#include "pdell/geom.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pdell {

/// Invertible 2x2 matrix over F_p, row-major: [[a, b], [c, d]].
/// Column k is the image of the k-th basis vector.
class AlphaMap {
public:
    AlphaMap(std::array<std::int64_t, 4> entries, Prime p);

    std::uint32_t modulus() const noexcept { return p_; }
    std::uint32_t entry(std::size_t row, std::size_t col) const { return m_.at(row * 2 + col); }
    const std::array<std::uint32_t, 4>& entries() const noexcept { return m_; }
    std::uint32_t determinant() const noexcept;

    std::array<std::uint32_t, 2> apply(std::uint32_t u1, std::uint32_t u2) const noexcept;

    static AlphaMap identity(Prime p) { return AlphaMap({1, 0, 0, 1}, p); }

    friend AlphaMap operator*(const AlphaMap& lhs, const AlphaMap& rhs);
    friend bool operator==(const AlphaMap&, const AlphaMap&) = default;
    friend auto operator<=>(const AlphaMap&, const AlphaMap&) = default;

    std::string to_string() const;

private:
    std::array<std::uint32_t, 4> m_{};
    std::uint32_t p_ = 2;
};

/// omega(alpha u, alpha v) == -omega(u, v) for all u, v, checked as M^T J M == -J.
bool is_antisymplectic(const AlphaMap& a);

/// All anti-symplectic maps, ordered lexicographically by entries.
std::vector<AlphaMap> enumerate_antisymplectic(Prime p, std::uint32_t bound = kDefaultEnumerationBound);

struct GraphLine {
    ProjLine line;
    AlphaMap alpha;
};

/// H_alpha = {(u, alpha u)}.
GraphLine graph_line(const AlphaMap& a);

/// True when l meets both r and s trivially.
bool is_graph(const ProjLine& l);
std::optional<AlphaMap> try_line_to_alpha(const ProjLine& l);
/// Throws NotAGraph when l meets r or s.
AlphaMap line_to_alpha(const ProjLine& l);

} // namespace pdell
