#pragma once

#include "blaschke/blaschke.hpp"

#include <string>

namespace blaschke::cli {

/// Disc figure: unit circle, the hyperbolic hull of the zeros (each edge
/// sampled at 64 geodesic points), zeros as filled dots and interior
/// critical points as crosses. Coincident points are drawn once with a
/// multiplicity label. The viewBox is [-1.05, 1.05]^2 with y pointing up.
std::string render_svg(const FiniteBlaschkeProduct& b);

} // namespace blaschke::cli
