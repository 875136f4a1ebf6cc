#include "pdell/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pdell {

std::int64_t gcd0(std::int64_t a, std::int64_t b) noexcept { return std::gcd(a, b); }

DabClass::DabClass(std::int64_t a, std::int64_t b, std::int64_t r) : a_(a), b_(b), r_(r) {
    if (r < 3) throw Error(ErrorCode::InvalidArgument, "r must be at least 3");
    if (gcd0(a, b) != 1)
        throw Error(ErrorCode::InvalidArgument, "D_{a,b} needs coprime a, b; got " + std::to_string(a) + "," +
                                                    std::to_string(b));
    if (a_ < 0 || (a_ == 0 && b_ < 0)) {
        a_ = -a_;
        b_ = -b_;
    }
}

NSClass& NSClass::add(const DabClass& c, std::int64_t coeff) {
    if (!terms_.empty() && terms_.begin()->first.r() != c.r())
        throw Error(ErrorCode::InvalidArgument, "classes on different surfaces");
    if ((terms_[c] += coeff) == 0) terms_.erase(c);
    return *this;
}

NSClass NSClass::vertical(std::int64_t r) { return NSClass(DabClass(0, 1, r)); }
NSClass NSClass::horizontal(std::int64_t r) { return NSClass(DabClass(1, 0, r)); }
NSClass NSClass::diagonal(std::int64_t r) { return NSClass(DabClass(1, 1, r)); }
NSClass NSClass::product_polarization(std::int64_t r) {
    NSClass xi(DabClass(1, 0, r));
    xi.add(DabClass(0, 1, r), 1);
    return xi;
}

std::int64_t intersect(const DabClass& x, const NSClass& y) {
    const auto a = x.a(), b = x.b(), r = x.r(), delta = x.delta();
    std::int64_t total = 0;
    for (const auto& [cls, coeff] : y.terms()) {
        if (cls.r() != r) throw Error(ErrorCode::InvalidArgument, "classes on different surfaces");
        std::int64_t value;
        if (cls == DabClass(0, 1, r))
            value = a * a / delta;
        else if (cls == DabClass(1, 0, r))
            value = b * b * (r / delta);
        else if (cls == DabClass(1, 1, r))
            value = (b - a) * (b - a) * (r / delta);
        else
            throw Error(ErrorCode::UnsupportedPairing,
                        "no pairing with D_{" + std::to_string(cls.a()) + "," + std::to_string(cls.b()) + "}");
        total += coeff * value;
    }
    return total;
}

std::string_view to_string(Constraint c) noexcept {
    switch (c) {
    case Constraint::GraphIntersection: return "C2";
    case Constraint::Degree: return "C3";
    case Constraint::Fibers: return "C45";
    case Constraint::Divisibility: return "C6";
    }
    return "unknown";
}

namespace {

struct Component {
    std::int64_t a, b, nu, delta;
};

struct Active {
    bool graph = true, degree = true, fibers = true, divisibility = true;

    explicit Active(std::span<const Constraint> dropped) {
        for (auto c : dropped) {
            switch (c) {
            case Constraint::GraphIntersection: graph = false; break;
            case Constraint::Degree: degree = false; break;
            case Constraint::Fibers: fibers = false; break;
            case Constraint::Divisibility: divisibility = false; break;
            }
        }
    }
};

void check_range(std::int64_t n, std::int64_t d) {
    if (n < 2 || d < 3)
        throw Error(ErrorCode::OutOfScope, "the certificate needs n >= 2 and d >= 3 (d = 2 is the bielliptic test)");
}

std::int64_t isqrt(std::int64_t n) {
    std::int64_t k = 0;
    while ((k + 1) * (k + 1) <= n) ++k;
    return k;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k <= n; ++k)
        if (n % k == 0) out.push_back(k);
    return out;
}

// C1 normalization and coprimality, box bounds nu a <= n, b^2 <= n (each implied by C3 and
// by C4 + C5, since a^2/delta >= a and r/delta >= 1), and the per-component constraints.
bool component_ok(std::int64_t n, std::int64_t r, const Component& c, const Active& on) {
    if (gcd0(c.a, c.b) != 1 || (c.a == 0 && c.b != 1)) return false;
    if (c.nu * c.a > n || c.b * c.b > n) return false;
    // Graphs meet both coordinate curves only in 0, so n^2 = nu * 1 there.
    if (on.graph && (c.a == 0 || c.b == 0) && c.nu != n * n) return false;
    if (on.degree && (c.a * c.a + c.b * c.b * r) * c.nu != n * c.delta) return false;
    if (on.divisibility && (c.nu * (c.a - c.b)) % n != 0) return false;
    return true;
}

bool pair_ok(std::int64_t n, std::int64_t r, const Component& x, const Component& y, const Active& on) {
    if (!on.fibers) return true;
    return x.nu * (x.a * x.a / x.delta) + y.nu * (y.a * y.a / y.delta) == n &&
           x.nu * x.b * x.b * (r / x.delta) + y.nu * y.b * y.b * (r / y.delta) == n;
}

} // namespace

SmoothnessReport smoothness_certificate(std::int64_t n, std::int64_t d, std::span<const Constraint> dropped) {
    check_range(n, d);
    const Active on(dropped);
    const std::int64_t r = d * n - 1;
    const auto nus = divisors(n * n);
    const auto bmax = isqrt(n);

    std::vector<Component> comps;
    for (std::int64_t a = 0; a <= n; ++a)
        for (std::int64_t b = -bmax; b <= bmax; ++b)
            for (auto nu : nus) {
                Component c{a, b, nu, a == 0 ? r : gcd0(a, r)};
                if (component_ok(n, r, c, on)) comps.push_back(c);
            }

    const auto count = static_cast<std::int64_t>(comps.size());
    std::vector<std::vector<Candidate>> rows(comps.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto& x = comps[static_cast<std::size_t>(i)];
        for (const auto& y : comps)
            if (pair_ok(n, r, x, y, on))
                rows[static_cast<std::size_t>(i)].push_back({x.a, x.b, x.nu, y.a, y.b, y.nu});
    }

    SmoothnessReport report{n, d, r, {dropped.begin(), dropped.end()}, {}};
    for (auto& row : rows) report.candidates.insert(report.candidates.end(), row.begin(), row.end());
    return report;
}


bool bielliptic_reducible(const AlphaMap& alpha, std::span<const AlphaMap> torsion_actions) {
    if (alpha.modulus() != 2) throw Error(ErrorCode::OutOfScope, "the reducibility criterion is for d = 2");
    const auto id = AlphaMap::identity(Prime(2));
    return std::any_of(torsion_actions.begin(), torsion_actions.end(), [&](const AlphaMap& psi) {
        if (psi.modulus() != 2) throw Error(ErrorCode::OutOfScope, "torsion actions must be over F_2");
        return psi * alpha == id;
    });
}

} // namespace pdell
