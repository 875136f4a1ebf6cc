#pragma once

// Points and lines of P^3(F_p) = P((E x E')[p]) and their incidence with the
// product symplectic form.

#include "pdell/fp.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pdell {

using Row = std::array<std::uint32_t, 4>;

/// Rank of a small set of vectors over F_p.
int rank_mod_p(std::span<const Row> rows, std::uint32_t p);

/// A point of P^3(F_p); the representative has its first nonzero coordinate equal to 1.
class ProjPoint {
public:
    explicit ProjPoint(const TorsionVector& v);

    const TorsionVector& representative() const noexcept { return rep_; }
    std::uint32_t modulus() const noexcept { return rep_.modulus; }
    /// Index of the first nonzero coordinate.
    int pivot() const noexcept;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b);

    std::string to_string() const { return rep_.to_string(); }

private:
    TorsionVector rep_;
};

/// A 2-dimensional subspace of (E x E')[p], stored as its reduced row echelon basis.
///
/// Canonical order: pivot columns first, then the basis rows lexicographically.
/// enumerate_lines() and line_at() follow this order.
class ProjLine {
public:
    ProjLine(const TorsionVector& a, const TorsionVector& b);

    std::uint32_t modulus() const noexcept { return p_; }
    TorsionVector basis(std::size_t i) const;
    const std::array<Row, 2>& rows() const noexcept { return rows_; }
    std::array<int, 2> pivots() const noexcept { return pivots_; }

    bool contains(const TorsionVector& v) const;
    bool contains(const ProjPoint& pt) const { return contains(pt.representative()); }
    /// The p + 1 points on the line, in canonical point order.
    std::vector<ProjPoint> points() const;

    friend bool operator==(const ProjLine& a, const ProjLine& b) {
        return a.p_ == b.p_ && a.rows_ == b.rows_;
    }
    friend std::strong_ordering operator<=>(const ProjLine& a, const ProjLine& b);

    std::string to_string() const;

private:
    ProjLine(std::array<Row, 2> rref, std::array<int, 2> pivots, std::uint32_t p)
        : rows_(rref), pivots_(pivots), p_(p) {}
    friend ProjLine line_at(Prime p, std::uint64_t index);

    std::array<Row, 2> rows_{};
    std::array<int, 2> pivots_{};
    std::uint32_t p_ = 2;
};

enum class LineRelation { Equal, Meet, Skew };

std::string_view to_string(LineRelation rel) noexcept;

std::uint64_t point_count(Prime p) noexcept;
std::uint64_t line_count(Prime p) noexcept;

/// Position of a point in canonical order, in [0, point_count(p)).
std::uint64_t point_index(const ProjPoint& pt);
ProjPoint point_at(Prime p, std::uint64_t index);
/// The index-th line in canonical order, in [0, line_count(p)).
ProjLine line_at(Prime p, std::uint64_t index);

std::vector<ProjPoint> enumerate_points(Prime p, std::uint32_t bound = kDefaultEnumerationBound);
std::vector<ProjLine> enumerate_lines(Prime p, std::uint32_t bound = kDefaultEnumerationBound);

bool is_isotropic(const ProjLine& l);
/// dim(l1 cap l2) as linear subspaces: 2, 1 or 0.
int intersection_dimension(const ProjLine& l1, const ProjLine& l2);
LineRelation line_relation(const ProjLine& l1, const ProjLine& l2);
inline bool lines_meet(const ProjLine& l1, const ProjLine& l2) {
    return line_relation(l1, l2) != LineRelation::Skew;
}

/// r = P(E[p] x {0}).
ProjLine line_r(Prime p);
/// s = P({0} x E'[p]).
ProjLine line_s(Prime p);

struct IsotropicLineStats {
    std::uint64_t total = 0;
    std::uint64_t through_any_point = 0;
    std::uint64_t meeting_isotropic_line = 0;
    std::uint64_t meeting_non_isotropic_line = 0;

    friend bool operator==(const IsotropicLineStats&, const IsotropicLineStats&) = default;
};

/// Exhaustive census of isotropic lines. The pencil size is checked at every point;
/// the meet counts use the first isotropic line and r as witnesses.
IsotropicLineStats isotropic_line_stats(Prime p, std::uint32_t bound = kDefaultEnumerationBound);

// Data-parallel kernels over the line index space.

template <class Pred>
std::uint64_t count_lines(Prime p, Pred pred) {
    const auto n = static_cast<std::int64_t>(line_count(p));
    std::uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (std::int64_t i = 0; i < n; ++i)
        if (pred(line_at(p, static_cast<std::uint64_t>(i)))) ++count;
    return count;
}

/// Lines satisfying pred, in canonical order regardless of thread count.
template <class Pred>
std::vector<ProjLine> collect_lines(Prime p, Pred pred) {
    const auto n = static_cast<std::int64_t>(line_count(p));
    int chunks = 1;
#ifdef _OPENMP
    chunks = omp_get_max_threads();
#endif
    std::vector<std::vector<ProjLine>> parts(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static, 1)
    for (int c = 0; c < chunks; ++c) {
        const std::int64_t lo = n * c / chunks, hi = n * (c + 1) / chunks;
        for (std::int64_t i = lo; i < hi; ++i) {
            auto l = line_at(p, static_cast<std::uint64_t>(i));
            if (pred(l)) parts[static_cast<std::size_t>(c)].push_back(l);
        }
    }
    std::vector<ProjLine> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

} // namespace pdell
