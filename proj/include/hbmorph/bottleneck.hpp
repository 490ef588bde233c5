// Exact bottleneck distance between persistence diagrams.
#pragma once

#include "hbmorph/diagram.hpp"

namespace hbm {

// Minimum over perfect matchings (with diagonal augmentation) of the maximum
// L-infinity matching cost. Exact: binary search over the candidate set of all
// pairwise distances and diagonal projection costs, feasibility by maximum
// bipartite matching. Diagrams must agree on dim, direction and units.
double bottleneck(const persistence_diagram& d1, const persistence_diagram& d2);

} // namespace hbm
