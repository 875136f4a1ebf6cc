#pragma once

// Prime-field scalars and the 4-dimensional torsion space (E x E')[p].

#include "pdell/error.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace pdell {

bool is_prime(std::int64_t n) noexcept;

/// A validated prime modulus. Construction throws InvalidModulus for non-primes.
class Prime {
public:
    explicit Prime(std::int64_t n);

    std::uint32_t value() const noexcept { return value_; }
    operator std::uint32_t() const noexcept { return value_; }

    friend bool operator==(Prime, Prime) = default;

private:
    std::uint32_t value_;
};

/// Largest prime accepted by the enumerations unless the caller raises it.
inline constexpr std::uint32_t kDefaultEnumerationBound = 101;

void check_enumeration_bound(Prime p, std::uint32_t bound);

namespace modp {

inline std::uint32_t reduce(std::int64_t x, std::uint32_t p) noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}
inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    return a >= b ? a - b : a + p - b;
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) noexcept { return a == 0 ? 0 : p - a; }
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

} // namespace modp

/// An element of F_p carrying its modulus.
class Fp {
public:
    Fp(std::int64_t value, Prime p) : value_(modp::reduce(value, p)), modulus_(p) {}

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    Fp operator-() const;
    Fp inverse() const;

    friend Fp operator+(Fp a, Fp b);
    friend Fp operator-(Fp a, Fp b);
    friend Fp operator*(Fp a, Fp b);
    friend bool operator==(Fp a, Fp b);

private:
    Fp(std::uint32_t value, std::uint32_t modulus, std::nullptr_t) : value_(value), modulus_(modulus) {}
    static std::uint32_t common_modulus(Fp a, Fp b);

    std::uint32_t value_;
    std::uint32_t modulus_;
};

/// A vector of (E x E')[p] in coordinates (u1, u2, u'1, u'2).
struct TorsionVector {
    std::array<std::uint32_t, 4> coords{};
    std::uint32_t modulus = 2;

    TorsionVector() = default;
    TorsionVector(std::array<std::int64_t, 4> values, Prime p);

    Fp coord(std::size_t i) const { return Fp(coords.at(i), Prime(modulus)); }
    bool is_zero() const noexcept;

    TorsionVector operator+(const TorsionVector& other) const;
    TorsionVector scaled(std::uint32_t factor) const;

    friend bool operator==(const TorsionVector&, const TorsionVector&) = default;
    friend auto operator<=>(const TorsionVector&, const TorsionVector&) = default;

    std::string to_string() const;
};

/// omega(u, v) = u1 v2 - u2 v1 on one factor.
inline std::uint32_t determinant_form(std::uint32_t u1, std::uint32_t u2, std::uint32_t v1,
                                      std::uint32_t v2, std::uint32_t p) noexcept {
    return modp::sub(modp::mul(u1, v2, p), modp::mul(u2, v1, p), p);
}

/// The product pairing Omega(x, y) = omega(u, v) + omega(u', v').
std::uint32_t symplectic_raw(const std::array<std::uint32_t, 4>& x,
                             const std::array<std::uint32_t, 4>& y, std::uint32_t p) noexcept;

Fp symplectic_form(const TorsionVector& x, const TorsionVector& y);

} // namespace pdell
