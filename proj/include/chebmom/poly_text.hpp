#pragma once

#include <string>

#include "chebmom/rat_poly.hpp"

namespace chebmom {

// Polynomial input accepted by the CLI: either a comma-separated ascending
// coefficient list ("-1,0,2"), or a sum of sugar terms built from Tk
// (Chebyshev polynomial) and dTk (its derivative) with optional rational
// scalar factors, e.g. "dT3+dT2", "3/2 T4 - dT2 + 5".
RatPoly parse_poly_spec(const std::string& text);

}  // namespace chebmom
