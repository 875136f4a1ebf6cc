#include "pdell/geom.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace pdell {

namespace {

constexpr std::array<std::array<int, 2>, 6> kPivotPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::uint64_t ipow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// Number of free entries in the echelon basis with pivots (i, j).
int free_entries(int i, int j) { return (3 - i - 1) + (3 - j); }

void normalize(Row& v, std::uint32_t p) {
    for (auto c : v) {
        if (c == 0) continue;
        const auto s = modp::inv(c, p);
        for (auto& x : v) x = modp::mul(x, s, p);
        return;
    }
}

int first_nonzero(const Row& v) {
    for (int k = 0; k < 4; ++k)
        if (v[static_cast<std::size_t>(k)] != 0) return k;
    return 4;
}

void require_same_field(std::uint32_t a, std::uint32_t b) {
    if (a != b)
        throw Error(ErrorCode::ModulusMismatch,
                    "lines over F_" + std::to_string(a) + " and F_" + std::to_string(b));
}

} // namespace

int rank_mod_p(std::span<const Row> rows, std::uint32_t p) {
    std::vector<Row> m(rows.begin(), rows.end());
    int rank = 0;
    for (std::size_t col = 0; col < 4 && static_cast<std::size_t>(rank) < m.size(); ++col) {
        auto piv = std::find_if(m.begin() + rank, m.end(), [&](const Row& r) { return r[col] != 0; });
        if (piv == m.end()) continue;
        std::swap(*piv, m[static_cast<std::size_t>(rank)]);
        auto& pr = m[static_cast<std::size_t>(rank)];
        const auto s = modp::inv(pr[col], p);
        for (auto& x : pr) x = modp::mul(x, s, p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || m[i][col] == 0) continue;
            const auto f = m[i][col];
            for (std::size_t k = 0; k < 4; ++k) m[i][k] = modp::sub(m[i][k], modp::mul(f, pr[k], p), p);
        }
        ++rank;
    }
    return rank;
}

ProjPoint::ProjPoint(const TorsionVector& v) : rep_(v) {
    if (v.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero vector is not a projective point");
    normalize(rep_.coords, rep_.modulus);
}

int ProjPoint::pivot() const noexcept { return first_nonzero(rep_.coords); }

std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    if (auto c = a.modulus() <=> b.modulus(); c != 0) return c;
    if (auto c = a.pivot() <=> b.pivot(); c != 0) return c;
    return a.rep_.coords <=> b.rep_.coords;
}

ProjLine::ProjLine(const TorsionVector& a, const TorsionVector& b) : p_(a.modulus) {
    require_same_field(a.modulus, b.modulus);
    std::array<Row, 2> m{a.coords, b.coords};
    int rank = 0;
    for (std::size_t col = 0; col < 4 && rank < 2; ++col) {
        std::size_t r = static_cast<std::size_t>(rank);
        if (m[r][col] == 0 && r == 0 && m[1][col] != 0) std::swap(m[0], m[1]);
        if (m[r][col] == 0) continue;
        const auto s = modp::inv(m[r][col], p_);
        for (auto& x : m[r]) x = modp::mul(x, s, p_);
        auto& other = m[1 - r];
        const auto f = other[col];
        for (std::size_t k = 0; k < 4; ++k) other[k] = modp::sub(other[k], modp::mul(f, m[r][k], p_), p_);
        pivots_[r] = static_cast<int>(col);
        ++rank;
    }
    if (rank < 2) throw Error(ErrorCode::InvalidArgument, "vectors do not span a 2-dimensional subspace");
    rows_ = m;
}

TorsionVector ProjLine::basis(std::size_t i) const {
    TorsionVector v;
    v.coords = rows_.at(i);
    v.modulus = p_;
    return v;
}

bool ProjLine::contains(const TorsionVector& v) const {
    require_same_field(p_, v.modulus);
    const auto c0 = v.coords[static_cast<std::size_t>(pivots_[0])];
    const auto c1 = v.coords[static_cast<std::size_t>(pivots_[1])];
    for (std::size_t k = 0; k < 4; ++k) {
        const auto expect = modp::add(modp::mul(c0, rows_[0][k], p_), modp::mul(c1, rows_[1][k], p_), p_);
        if (expect != v.coords[k]) return false;
    }
    return true;
}

std::vector<ProjPoint> ProjLine::points() const {
    std::vector<ProjPoint> out;
    out.reserve(p_ + 1);
    out.emplace_back(basis(1));
    for (std::uint32_t t = 0; t < p_; ++t) out.emplace_back(basis(0) + basis(1).scaled(t));
    std::sort(out.begin(), out.end());
    return out;
}

std::strong_ordering operator<=>(const ProjLine& a, const ProjLine& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
    return a.rows_ <=> b.rows_;
}

std::string ProjLine::to_string() const {
    return "span{" + basis(0).to_string() + "," + basis(1).to_string() + "}";
}

std::string_view to_string(LineRelation rel) noexcept {
    switch (rel) {
    case LineRelation::Equal: return "equal";
    case LineRelation::Meet: return "meet";
    case LineRelation::Skew: return "skew";
    }
    return "unknown";
}

std::uint64_t point_count(Prime p) noexcept {
    const std::uint64_t q = p.value();
    return q * q * q + q * q + q + 1;
}

std::uint64_t line_count(Prime p) noexcept {
    const std::uint64_t q = p.value();
    return (q * q + 1) * (q * q + q + 1);
}

std::uint64_t point_index(const ProjPoint& pt) {
    const std::uint64_t q = pt.modulus();
    const int k = pt.pivot();
    std::uint64_t offset = 0;
    for (int j = 0; j < k; ++j) offset += ipow(q, 3 - j);
    std::uint64_t local = 0;
    for (int c = k + 1; c < 4; ++c) local = local * q + pt.representative().coords[static_cast<std::size_t>(c)];
    return offset + local;
}

ProjPoint point_at(Prime p, std::uint64_t index) {
    const std::uint64_t q = p.value();
    if (index >= point_count(p)) throw Error(ErrorCode::InvalidArgument, "point index out of range");
    int k = 0;
    while (index >= ipow(q, 3 - k)) index -= ipow(q, 3 - k++);
    TorsionVector v;
    v.modulus = p;
    v.coords[static_cast<std::size_t>(k)] = 1;
    for (int c = 3; c > k; --c) {
        v.coords[static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(index % q);
        index /= q;
    }
    return ProjPoint(v);
}

ProjLine line_at(Prime p, std::uint64_t index) {
    const std::uint64_t q = p.value();
    if (index >= line_count(p)) throw Error(ErrorCode::InvalidArgument, "line index out of range");
    for (const auto& [i, j] : kPivotPairs) {
        const auto block = ipow(q, free_entries(i, j));
        if (index >= block) {
            index -= block;
            continue;
        }
        std::array<Row, 2> rows{};
        rows[0][static_cast<std::size_t>(i)] = 1;
        rows[1][static_cast<std::size_t>(j)] = 1;
        // Free entries, least significant last: row 1 after j, then row 0 after i (skipping j).
        for (int c = 3; c > j; --c) {
            rows[1][static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(index % q);
            index /= q;
        }
        for (int c = 3; c > i; --c) {
            if (c == j) continue;
            rows[0][static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(index % q);
            index /= q;
        }
        return ProjLine(rows, {i, j}, p);
    }
    throw Error(ErrorCode::InvalidArgument, "line index out of range");
}

std::vector<ProjPoint> enumerate_points(Prime p, std::uint32_t bound) {
    check_enumeration_bound(p, bound);
    const auto n = static_cast<std::int64_t>(point_count(p));
    std::vector<ProjPoint> out(static_cast<std::size_t>(n), ProjPoint(TorsionVector({0, 0, 0, 1}, p)));
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = point_at(p, static_cast<std::uint64_t>(i));
    return out;
}

std::vector<ProjLine> enumerate_lines(Prime p, std::uint32_t bound) {
    check_enumeration_bound(p, bound);
    const auto n = static_cast<std::int64_t>(line_count(p));
    std::vector<ProjLine> out(static_cast<std::size_t>(n), line_at(p, 0));
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = line_at(p, static_cast<std::uint64_t>(i));
    return out;
}

bool is_isotropic(const ProjLine& l) {
    return symplectic_raw(l.rows()[0], l.rows()[1], l.modulus()) == 0;
}

int intersection_dimension(const ProjLine& l1, const ProjLine& l2) {
    require_same_field(l1.modulus(), l2.modulus());
    const std::array<Row, 4> all{l1.rows()[0], l1.rows()[1], l2.rows()[0], l2.rows()[1]};
    return 4 - rank_mod_p(all, l1.modulus());
}

LineRelation line_relation(const ProjLine& l1, const ProjLine& l2) {
    require_same_field(l1.modulus(), l2.modulus());
    if (l1 == l2) return LineRelation::Equal;
    return intersection_dimension(l1, l2) == 1 ? LineRelation::Meet : LineRelation::Skew;
}

ProjLine line_r(Prime p) { return ProjLine(TorsionVector({1, 0, 0, 0}, p), TorsionVector({0, 1, 0, 0}, p)); }

ProjLine line_s(Prime p) { return ProjLine(TorsionVector({0, 0, 1, 0}, p), TorsionVector({0, 0, 0, 1}, p)); }

IsotropicLineStats isotropic_line_stats(Prime p, std::uint32_t bound) {
    check_enumeration_bound(p, bound);
    const auto n = static_cast<std::int64_t>(line_count(p));
    const auto npts = static_cast<std::size_t>(point_count(p));

    std::int64_t first_iso = -1;
    for (std::int64_t i = 0; i < n && first_iso < 0; ++i)
        if (is_isotropic(line_at(p, static_cast<std::uint64_t>(i)))) first_iso = i;
    const ProjLine iso_witness = line_at(p, static_cast<std::uint64_t>(first_iso));
    const ProjLine r = line_r(p);

    IsotropicLineStats stats;
    std::uint64_t total = 0, meet_iso = 0, meet_non_iso = 0;
    std::vector<std::uint64_t> pencil(npts, 0);
#pragma omp parallel reduction(+ : total, meet_iso, meet_non_iso)
    {
        std::vector<std::uint64_t> local(npts, 0);
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            const auto l = line_at(p, static_cast<std::uint64_t>(i));
            if (!is_isotropic(l)) continue;
            ++total;
            if (lines_meet(l, iso_witness)) ++meet_iso;
            if (lines_meet(l, r)) ++meet_non_iso;
            for (const auto& pt : l.points()) ++local[point_index(pt)];
        }
#pragma omp critical
        for (std::size_t k = 0; k < npts; ++k) pencil[k] += local[k];
    }
    stats.total = total;
    stats.meeting_isotropic_line = meet_iso;
    stats.meeting_non_isotropic_line = meet_non_iso;
    stats.through_any_point = pencil.front();
    if (!std::all_of(pencil.begin(), pencil.end(), [&](auto c) { return c == pencil.front(); }))
        throw Error(ErrorCode::Inconsistent, "isotropic pencil size differs between points");
    return stats;
}

} // namespace pdell
