#include "pdell/alpha.hpp"

#include <sstream>

namespace pdell {

AlphaMap::AlphaMap(std::array<std::int64_t, 4> entries, Prime p) : p_(p) {
    for (std::size_t k = 0; k < 4; ++k) m_[k] = modp::reduce(entries[k], p);
    if (determinant() == 0)
        throw Error(ErrorCode::NotAnIsomorphism, "singular matrix " + to_string());
}

std::uint32_t AlphaMap::determinant() const noexcept {
    return modp::sub(modp::mul(m_[0], m_[3], p_), modp::mul(m_[1], m_[2], p_), p_);
}

std::array<std::uint32_t, 2> AlphaMap::apply(std::uint32_t u1, std::uint32_t u2) const noexcept {
    return {modp::add(modp::mul(m_[0], u1, p_), modp::mul(m_[1], u2, p_), p_),
            modp::add(modp::mul(m_[2], u1, p_), modp::mul(m_[3], u2, p_), p_)};
}

AlphaMap operator*(const AlphaMap& lhs, const AlphaMap& rhs) {
    if (lhs.p_ != rhs.p_) throw Error(ErrorCode::ModulusMismatch, "composing maps over different fields");
    const auto p = lhs.p_;
    const auto& a = lhs.m_;
    const auto& b = rhs.m_;
    auto dot = [p](std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t w) {
        return modp::add(modp::mul(x, y, p), modp::mul(z, w, p), p);
    };
    return AlphaMap({dot(a[0], b[0], a[1], b[2]), dot(a[0], b[1], a[1], b[3]),
                     dot(a[2], b[0], a[3], b[2]), dot(a[2], b[1], a[3], b[3])},
                    Prime(p));
}

std::string AlphaMap::to_string() const {
    std::ostringstream os;
    os << "[[" << m_[0] << ',' << m_[1] << "],[" << m_[2] << ',' << m_[3] << "]]";
    return os.str();
}

bool is_antisymplectic(const AlphaMap& a) {
    const auto p = a.modulus();
    // J = [[0, 1], [-1, 0]] represents omega(u, v) = u^T J v.
    const std::array<std::uint32_t, 4> j{0, 1, modp::neg(1, p), 0};
    const auto& m = a.entries();
    // (M^T J M)_{ik} = sum_{l,n} M_{li} J_{ln} M_{nk}
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < 2; ++k) {
            std::uint32_t acc = 0;
            for (std::size_t l = 0; l < 2; ++l)
                for (std::size_t n = 0; n < 2; ++n)
                    acc = modp::add(acc, modp::mul(modp::mul(m[l * 2 + i], j[l * 2 + n], p), m[n * 2 + k], p), p);
            if (acc != modp::neg(j[i * 2 + k], p)) return false;
        }
    }
    return true;
}

std::vector<AlphaMap> enumerate_antisymplectic(Prime p, std::uint32_t bound) {
    check_enumeration_bound(p, bound);
    const std::uint32_t q = p.value();
    std::vector<AlphaMap> out;
    out.reserve(static_cast<std::size_t>(q) * (q * q - 1));
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            for (std::uint32_t c = 0; c < q; ++c)
                for (std::uint32_t d = 0; d < q; ++d) {
                    if (modp::sub(modp::mul(a, d, q), modp::mul(b, c, q), q) == 0) continue;
                    AlphaMap m({a, b, c, d}, p);
                    if (is_antisymplectic(m)) out.push_back(m);
                }
    return out;
}

GraphLine graph_line(const AlphaMap& a) {
    const Prime p(a.modulus());
    const auto c1 = a.apply(1, 0);
    const auto c2 = a.apply(0, 1);
    ProjLine l(TorsionVector({1, 0, c1[0], c1[1]}, p), TorsionVector({0, 1, c2[0], c2[1]}, p));
    return {l, a};
}

std::optional<AlphaMap> try_line_to_alpha(const ProjLine& l) {
    // A graph projects isomorphically onto E[p], so its echelon basis is (e1 | x), (e2 | y).
    if (l.pivots() != std::array<int, 2>{0, 1}) return std::nullopt;
    const auto& rows = l.rows();
    const std::uint32_t p = l.modulus();
    const std::uint32_t det = modp::sub(modp::mul(rows[0][2], rows[1][3], p), modp::mul(rows[1][2], rows[0][3], p), p);
    if (det == 0) return std::nullopt;
    return AlphaMap({rows[0][2], rows[1][2], rows[0][3], rows[1][3]}, Prime(p));
}

bool is_graph(const ProjLine& l) { return try_line_to_alpha(l).has_value(); }

AlphaMap line_to_alpha(const ProjLine& l) {
    if (auto a = try_line_to_alpha(l)) return *a;
    throw Error(ErrorCode::NotAGraph, l.to_string() + " meets E[p] x {0} or {0} x E'[p]");
}

} // namespace pdell
