#pragma once

#include "mfb/arrangement.hpp"
#include "mfb/graph.hpp"

namespace mfb {

// Incidence graph of lines and points with an arrow on every line vertex.
// Line vertices carry (1; n, 1), point vertices (m_j; n, 1), arrowheads
// (1; 0, 1). Line-point edges have type 2, arrows type 1.
PlumbingGraph build_gamma_c(const IncidenceData& inc);

}  // namespace mfb
