#pragma once

#include "mfb/arrangement.hpp"
#include "mfb/graph.hpp"

namespace mfb {

// Applies the vertex rules (genus, multiplicity) and replaces every type-2
// edge line--w_j by the chain of Str^-(1, m_j; n | 0,0;1), multiplicity-1 end
// at the line. Arrow edges become '+'. Euler numbers stay unset.
PlumbingGraph decorate_and_insert(const PlumbingGraph& gamma_c);

// e_i = -(sum over incident edges of sign * m_other) / m_i at every
// non-arrowhead vertex. Throws NonIntegralEuler or UnsupportedLoop.
PlumbingGraph solve_euler(const PlumbingGraph& decorated);

// True when e_i m_i + sum sign * m_other = 0 holds at every non-arrowhead
// vertex carrying both an euler number and a multiplicity.
bool satisfies_multiplicity_system(const PlumbingGraph& g);

PlumbingGraph strip_arrowheads(const PlumbingGraph& g);

// Closed plumbing graph of the Milnor fiber boundary, in vertex_order. With
// reduce = true the standard calculus reduction for the arrangement is
// applied afterwards (see calculus.hpp).
PlumbingGraph boundary_graph(const IncidenceData& inc, bool reduce = false);

}  // namespace mfb
