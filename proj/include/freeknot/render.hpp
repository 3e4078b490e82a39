#ifndef FREEKNOT_RENDER_HPP
#define FREEKNOT_RENDER_HPP

#include "freeknot/diagram.hpp"

#include <string>

namespace freeknot {

// Circles side by side, one per component, with letters evenly spaced
// clockwise from the top and every chord drawn as a straight segment.
std::string render_svg(const FramedDiagram& diagram);

// The framed 4-graph: one node per chord, one edge per arc. The first
// occurrence of a chord uses ports w/e and the second s/n, so opposite
// half-edges sit on opposite compass points.
std::string render_dot(const FramedDiagram& diagram);

}  // namespace freeknot

#endif  // FREEKNOT_RENDER_HPP
