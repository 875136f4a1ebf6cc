#include "pdell/reference.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pdell::reference {

std::vector<ProjLine> enumerate_lines(Prime p) {
    const std::uint32_t q = p.value();
    std::vector<TorsionVector> vectors;
    for (std::uint32_t k = 1; k < q * q * q * q; ++k) {
        TorsionVector v;
        v.modulus = q;
        std::uint32_t x = k;
        for (int c = 3; c >= 0; --c) {
            v.coords[static_cast<std::size_t>(c)] = x % q;
            x /= q;
        }
        vectors.push_back(v);
    }
    std::set<ProjLine> lines;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            const std::array<Row, 2> pair{vectors[i].coords, vectors[j].coords};
            if (rank_mod_p(pair, q) == 2) lines.insert(ProjLine(vectors[i], vectors[j]));
        }
    return {lines.begin(), lines.end()};
}

IsotropicLineStats isotropic_line_stats(Prime p) {
    const auto lines = reference::enumerate_lines(p);
    std::vector<ProjLine> iso;
    std::copy_if(lines.begin(), lines.end(), std::back_inserter(iso), [](const ProjLine& l) { return is_isotropic(l); });

    IsotropicLineStats stats;
    stats.total = iso.size();
    bool first = true;
    for (const auto& pt : enumerate_points(p)) {
        const auto through = static_cast<std::uint64_t>(
            std::count_if(iso.begin(), iso.end(), [&](const ProjLine& l) { return l.contains(pt); }));
        if (first) stats.through_any_point = through;
        else if (through != stats.through_any_point)
            throw Error(ErrorCode::Inconsistent, "isotropic pencil size differs between points");
        first = false;
    }
    const auto& w = iso.front();
    const auto r = line_r(p);
    for (const auto& l : iso) {
        if (intersection_dimension(l, w) > 0) ++stats.meeting_isotropic_line;
        if (intersection_dimension(l, r) > 0) ++stats.meeting_non_isotropic_line;
    }
    return stats;
}

SmoothnessReport smoothness_certificate(std::int64_t n, std::int64_t d, std::span<const Constraint> dropped) {
    if (n < 2 || d < 3) throw Error(ErrorCode::OutOfScope, "the certificate needs n >= 2 and d >= 3");
    bool graph = true, degree = true, fibers = true, divisibility = true;
    for (auto c : dropped) {
        graph = graph && c != Constraint::GraphIntersection;
        degree = degree && c != Constraint::Degree;
        fibers = fibers && c != Constraint::Fibers;
        divisibility = divisibility && c != Constraint::Divisibility;
    }
    const std::int64_t r = d * n - 1;
    std::int64_t bmax = 0;
    while ((bmax + 1) * (bmax + 1) <= n) ++bmax;
    SmoothnessReport report{n, d, r, {dropped.begin(), dropped.end()}, {}};

    auto delta_of = [r](std::int64_t a) { return a == 0 ? r : std::gcd(a, r); };
    auto fiber_vertical = [&](std::int64_t a) { return a * a / delta_of(a); };
    auto fiber_horizontal = [&](std::int64_t a, std::int64_t b) { return b * b * r / delta_of(a); };
    auto single = [&](std::int64_t a, std::int64_t b, std::int64_t nu) {
        if ((n * n) % nu != 0) return false;
        if (std::gcd(a, b) != 1 || (a == 0 && b != 1)) return false;
        if (graph && (a == 0 || b == 0) && nu != n * n) return false;
        if (degree && fiber_vertical(a) + fiber_horizontal(a, b) != n / nu) return false;
        if (degree && n % nu != 0) return false;
        if (divisibility && (nu * (a - b)) % n != 0) return false;
        return true;
    };

    for (std::int64_t a1 = 0; a1 <= n; ++a1)
        for (std::int64_t b1 = -bmax; b1 <= bmax; ++b1)
            for (std::int64_t nu1 = 1; nu1 <= n * n; ++nu1) {
                if (nu1 * a1 > n || !single(a1, b1, nu1)) continue;
                for (std::int64_t a2 = 0; a2 <= n; ++a2)
                    for (std::int64_t b2 = -bmax; b2 <= bmax; ++b2)
                        for (std::int64_t nu2 = 1; nu2 <= n * n; ++nu2) {
                            if (nu2 * a2 > n || !single(a2, b2, nu2)) continue;
                            if (fibers && (nu1 * fiber_vertical(a1) + nu2 * fiber_vertical(a2) != n ||
                                              nu1 * fiber_horizontal(a1, b1) + nu2 * fiber_horizontal(a2, b2) != n))
                                continue;
                            report.candidates.push_back({a1, b1, nu1, a2, b2, nu2});
                        }
            }
    return report;
}

} // namespace pdell::reference
