#pragma once

// Single-threaded reference implementations of the parallel kernels. They take the
// direct route (enumerate, normalize, dedupe; nested loops over full tuples) and are
// kept for cross-checking and benchmarking.

#include "pdell/geom.hpp"
#include "pdell/surface.hpp"

#include <vector>

namespace pdell::reference {

/// Every pair of independent vectors, reduced to echelon form and deduplicated.
std::vector<ProjLine> enumerate_lines(Prime p);

/// Census by explicit filtering: for every point, count the isotropic lines containing it.
IsotropicLineStats isotropic_line_stats(Prime p);

SmoothnessReport smoothness_certificate(std::int64_t n, std::int64_t d,
                                        std::span<const Constraint> dropped = {});

} // namespace pdell::reference
