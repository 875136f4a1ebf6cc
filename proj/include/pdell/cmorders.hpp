#pragma once

// Degree-2 endomorphisms of elliptic curves with complex multiplication and the
// twisting numbers of the reducible bi-tri-elliptic configurations they induce.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pdell {

/// xi with characteristic polynomial t^2 - trace t + norm; im_sign picks xi or its conjugate.
struct QuadEndo {
    std::int64_t trace = 0;
    std::int64_t norm = 2;
    int im_sign = 1;

    std::int64_t discriminant() const noexcept { return trace * trace - 4 * norm; }
    friend bool operator==(const QuadEndo&, const QuadEndo&) = default;
};

/// Maximal order O_K = Z[w] with w^2 = s w - q, so the basis is (1, w).
struct OrderLabel {
    std::int64_t discriminant;
    std::string name;
    std::int64_t w_trace;  // s
    std::int64_t w_norm;   // q
};

/// Coefficients {1, -trace, norm} of the monic characteristic polynomial.
std::array<std::int64_t, 3> char_poly(const QuadEndo& xi);

std::int64_t eval_char_poly(const QuadEndo& xi, std::int64_t t);

/// p_xi(-1) = 1 + trace + norm.
std::int64_t twisting_number(const QuadEndo& xi);

bool is_fundamental_discriminant(std::int64_t d) noexcept;

/// The maximal order containing xi; the three orders of class number 1 that carry norm-2 elements.
OrderLabel order_of(const QuadEndo& xi);

/// Multiplication by xi on the basis (1, w) of its maximal order, row-major.
std::array<std::int64_t, 4> multiplication_matrix(const QuadEndo& xi);

/// |det(I + M_xi)| = |N(1 + xi)|, computed from the multiplication matrix.
std::int64_t index_oracle(const QuadEndo& xi);

/// Human-readable xi, e.g. "-1+i" or "(1-i*sqrt(7))/2".
std::string describe(const QuadEndo& xi);

struct Degree2Entry {
    QuadEndo xi;
    OrderLabel order;
    std::int64_t m;
};

/// The ten norm-2 elements, ordered by (m, im_sign).
std::vector<Degree2Entry> enumerate_degree2();

} // namespace pdell
