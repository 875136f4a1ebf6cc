#pragma once

// Curve classes D_{a,b} = {(a x, b phi'(x))} on E x E' with E' = E / <xi>, ord(xi) = r,
// the smoothness certificate for the m = 1 construction, and the d = 2 reducibility test.

#include "pdell/alpha.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace pdell {

/// gcd with gcd(0, b) = |b|.
std::int64_t gcd0(std::int64_t a, std::int64_t b) noexcept;

class DabClass {
public:
    /// Normalizes to a >= 0 (and b = 1 when a = 0). Throws InvalidArgument unless gcd(a, b) = 1 and r >= 3.
    DabClass(std::int64_t a, std::int64_t b, std::int64_t r);

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t r() const noexcept { return r_; }
    /// Order of the kernel of E -> D_{a,b}: gcd(a, r), or r when a = 0.
    std::int64_t delta() const noexcept { return a_ == 0 ? r_ : gcd0(a_, r_); }

    friend bool operator==(const DabClass&, const DabClass&) = default;
    friend auto operator<=>(const DabClass&, const DabClass&) = default;

private:
    std::int64_t a_, b_, r_;
};

/// Formal integer combination of D_{a,b} classes over one r.
class NSClass {
public:
    NSClass() = default;
    NSClass(const DabClass& c) { add(c, 1); }

    NSClass& add(const DabClass& c, std::int64_t coeff);
    const std::map<DabClass, std::int64_t>& terms() const noexcept { return terms_; }

    static NSClass vertical(std::int64_t r);             // {0} x E' = D_{0,1}
    static NSClass horizontal(std::int64_t r);           // E x {0} = D_{1,0}
    static NSClass diagonal(std::int64_t r);             // D_{1,1}, the graph of phi'
    static NSClass product_polarization(std::int64_t r); // D_{1,0} + D_{0,1}

private:
    std::map<DabClass, std::int64_t> terms_;
};

/// x . y for y a combination of D_{0,1}, D_{1,0}, D_{1,1}; UnsupportedPairing for any other y.
std::int64_t intersect(const DabClass& x, const NSClass& y);

/// Constraint families of the certificate search; any subset may be dropped for ablation.
enum class Constraint {
    GraphIntersection,  // C2: n^2 = nu |H cap C|; H meets {0} x E' and E x {0} trivially
    Degree,             // C3: C . Xi = n / nu
    Fibers,             // C4 + C5: both fiber degrees of nu_1 C_1 + nu_2 C_2 equal n
    Divisibility,       // C6: n | nu (a - b)
};

std::string_view to_string(Constraint c) noexcept;

struct Candidate {
    std::int64_t a1, b1, nu1, a2, b2, nu2;
    friend bool operator==(const Candidate&, const Candidate&) = default;
    friend auto operator<=>(const Candidate&, const Candidate&) = default;
};

struct SmoothnessReport {
    std::int64_t n = 0, d = 0, r = 0;
    std::vector<Constraint> dropped;
    std::vector<Candidate> candidates;  // lexicographic order

    bool smooth() const noexcept { return candidates.empty(); }
};

/// Exhaustive search for a reducible principal polarization C_1 + C_2 on (E x E') / H.
/// Smooth iff no tuple survives. OutOfScope unless n >= 2 and d >= 3.
SmoothnessReport smoothness_certificate(std::int64_t n, std::int64_t d,
                                        std::span<const Constraint> dropped = {});

/// Over F_2: the polarization from H_alpha is reducible iff psi o alpha = id for one of the
/// 2-torsion actions of isomorphisms psi: E' -> E.
bool bielliptic_reducible(const AlphaMap& alpha, std::span<const AlphaMap> torsion_actions);

} // namespace pdell
