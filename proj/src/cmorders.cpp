#include "pdell/cmorders.hpp"

#include "pdell/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace pdell {

namespace {

bool squarefree(std::int64_t n) noexcept {
    n = std::llabs(n);
    for (std::int64_t k = 2; k * k <= n; ++k)
        if (n % (k * k) == 0) return false;
    return true;
}

std::int64_t mod4(std::int64_t n) noexcept { return ((n % 4) + 4) % 4; }

} // namespace

std::array<std::int64_t, 3> char_poly(const QuadEndo& xi) { return {1, -xi.trace, xi.norm}; }

std::int64_t eval_char_poly(const QuadEndo& xi, std::int64_t t) { return t * t - xi.trace * t + xi.norm; }

std::int64_t twisting_number(const QuadEndo& xi) {
    if (xi.norm != 2) throw Error(ErrorCode::InvalidArgument, "twisting numbers are defined for degree-2 endomorphisms");
    return eval_char_poly(xi, -1);
}

bool is_fundamental_discriminant(std::int64_t d) noexcept {
    if (d == 0 || d == 1) return false;
    if (mod4(d) == 1) return squarefree(d);
    if (mod4(d) != 0) return false;
    const auto k = d / 4;
    return (mod4(k) == 2 || mod4(k) == 3) && squarefree(k);
}

OrderLabel order_of(const QuadEndo& xi) {
    if (xi.norm != 2 || xi.discriminant() >= 0 || (xi.im_sign != 1 && xi.im_sign != -1))
        throw Error(ErrorCode::InvalidArgument, "expected a non-real element of norm 2");
    switch (xi.discriminant()) {
    case -4: return {-4, "Z[i]", 0, 1};
    case -8: return {-8, "Z[i*sqrt(2)]", 0, 2};
    case -7: return {-7, "Z[(1+i*sqrt(7))/2]", 1, 2};
    default: break;
    }
    throw Error(ErrorCode::InvalidArgument, "no norm-2 element with discriminant " + std::to_string(xi.discriminant()));
}

std::array<std::int64_t, 4> multiplication_matrix(const QuadEndo& xi) {
    const auto o = order_of(xi);
    // xi = x + y w with y = im_sign (Im w > 0) and trace(xi) = 2x + y s.
    const std::int64_t y = xi.im_sign;
    const std::int64_t x = (xi.trace - y * o.w_trace) / 2;
    // xi * 1 = x + y w;  xi * w = x w + y (s w - q) = -q y + (x + s y) w.
    return {x, -o.w_norm * y, y, x + o.w_trace * y};
}

std::int64_t index_oracle(const QuadEndo& xi) {
    const auto m = multiplication_matrix(xi);
    return std::llabs((1 + m[0]) * (1 + m[3]) - m[1] * m[2]);
}

std::string describe(const QuadEndo& xi) {
    const char sign = xi.im_sign > 0 ? '+' : '-';
    switch (xi.discriminant()) {
    case -4: return std::to_string(xi.trace / 2) + sign + "i";
    case -8: return std::string(xi.im_sign > 0 ? "" : "-") + "i*sqrt(2)";
    case -7: return "(" + std::to_string(xi.trace) + sign + "i*sqrt(7))/2";
    default: break;
    }
    return "t^2" + std::string(xi.trace <= 0 ? "+" : "-") + std::to_string(std::llabs(xi.trace)) + "t+" +
           std::to_string(xi.norm);
}

std::vector<Degree2Entry> enumerate_degree2() {
    std::vector<Degree2Entry> out;
    // Non-real roots of t^2 - a t + 2 need a^2 < 8.
    for (std::int64_t trace = -2; trace <= 2; ++trace) {
        for (int sign : {-1, 1}) {
            QuadEndo xi{trace, 2, sign};
            out.push_back({xi, order_of(xi), twisting_number(xi)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Degree2Entry& a, const Degree2Entry& b) {
        return std::tie(a.m, a.xi.im_sign) < std::tie(b.m, b.xi.im_sign);
    });
    return out;
}

} // namespace pdell
