#include "pdell/fp.hpp"

#include <sstream>
#include <utility>

namespace pdell {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t k = 3; k * k <= n; k += 2)
        if (n % k == 0) return false;
    return true;
}

Prime::Prime(std::int64_t n) {
    if (n > 0xFFFF || !is_prime(n))
        throw Error(ErrorCode::InvalidModulus, std::to_string(n) + " is not a supported prime modulus");
    value_ = static_cast<std::uint32_t>(n);
}

void check_enumeration_bound(Prime p, std::uint32_t bound) {
    if (p.value() > bound)
        throw Error(ErrorCode::InvalidArgument, "p = " + std::to_string(p.value()) +
                                                    " exceeds the enumeration bound " +
                                                    std::to_string(bound));
}

namespace modp {

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t, p);
}

} // namespace modp

std::uint32_t Fp::common_modulus(Fp a, Fp b) {
    if (a.modulus_ != b.modulus_)
        throw Error(ErrorCode::ModulusMismatch, "F_" + std::to_string(a.modulus_) + " vs F_" +
                                                    std::to_string(b.modulus_));
    return a.modulus_;
}

Fp Fp::operator-() const { return Fp(modp::neg(value_, modulus_), modulus_, nullptr); }

Fp Fp::inverse() const { return Fp(modp::inv(value_, modulus_), modulus_, nullptr); }

Fp operator+(Fp a, Fp b) {
    auto p = Fp::common_modulus(a, b);
    return Fp(modp::add(a.value_, b.value_, p), p, nullptr);
}

Fp operator-(Fp a, Fp b) {
    auto p = Fp::common_modulus(a, b);
    return Fp(modp::sub(a.value_, b.value_, p), p, nullptr);
}

Fp operator*(Fp a, Fp b) {
    auto p = Fp::common_modulus(a, b);
    return Fp(modp::mul(a.value_, b.value_, p), p, nullptr);
}

bool operator==(Fp a, Fp b) {
    Fp::common_modulus(a, b);
    return a.value_ == b.value_;
}

TorsionVector::TorsionVector(std::array<std::int64_t, 4> values, Prime p) : modulus(p) {
    for (std::size_t i = 0; i < 4; ++i) coords[i] = modp::reduce(values[i], p);
}

bool TorsionVector::is_zero() const noexcept {
    return coords[0] == 0 && coords[1] == 0 && coords[2] == 0 && coords[3] == 0;
}

TorsionVector TorsionVector::operator+(const TorsionVector& other) const {
    if (modulus != other.modulus)
        throw Error(ErrorCode::ModulusMismatch, "torsion vectors over different fields");
    TorsionVector out = *this;
    for (std::size_t i = 0; i < 4; ++i) out.coords[i] = modp::add(coords[i], other.coords[i], modulus);
    return out;
}

TorsionVector TorsionVector::scaled(std::uint32_t factor) const {
    TorsionVector out = *this;
    for (auto& c : out.coords) c = modp::mul(c, factor % modulus, modulus);
    return out;
}

std::string TorsionVector::to_string() const {
    std::ostringstream os;
    os << '(' << coords[0] << ',' << coords[1] << ',' << coords[2] << ',' << coords[3] << ')';
    return os.str();
}

std::uint32_t symplectic_raw(const std::array<std::uint32_t, 4>& x,
                             const std::array<std::uint32_t, 4>& y, std::uint32_t p) noexcept {
    return modp::add(determinant_form(x[0], x[1], y[0], y[1], p),
                     determinant_form(x[2], x[3], y[2], y[3], p), p);
}

Fp symplectic_form(const TorsionVector& x, const TorsionVector& y) {
    if (x.modulus != y.modulus)
        throw Error(ErrorCode::ModulusMismatch, "torsion vectors over different fields");
    return Fp(symplectic_raw(x.coords, y.coords, x.modulus), Prime(x.modulus));
}

} // namespace pdell
