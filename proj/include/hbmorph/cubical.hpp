// Top-cell cubical complexes over 2D scalar fields and their superlevel H1.
#pragma once

#include "hbmorph/complex.hpp"
#include "hbmorph/edt.hpp"

namespace hbm {

// Full cubical complex of the field's rectangle: pixels are 2-cells carrying
// the field value; edges and vertices take the max over incident pixels.
// Cells are ordered by (value desc, dim asc, cell id asc).
filtered_complex build_superlevel_complex(const scalar_field2d& field);

// H1 diagram of the superlevel filtration; all pairs satisfy birth >= death >= 0
// and no essential H1 classes exist (the zero background fills the rectangle).
persistence_diagram superlevel_h1(const scalar_field2d& field);

} // namespace hbm
