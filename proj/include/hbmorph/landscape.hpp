// Persistence landscapes (Bubenik) and their L1 norms.
#pragma once

#include "hbmorph/diagram.hpp"

namespace hbm {

// Value of the k-th landscape level at t (k >= 1). Each pair contributes the
// tent min(t - lo, hi - t)+ with (lo, hi) = sorted (birth, death); superlevel
// diagrams are handled by the same sorted form.
double landscape_eval(const persistence_diagram& d, int k, double t);

// Full landscape L1 norm sum_k ||lambda_k||_1 in closed form: the pointwise sum
// over levels equals the sum of tents, so the norm is sum persistence^2 / 4.
double landscape_l1(const persistence_diagram& d);

// Exact integral of sum_{k<=max_level} lambda_k by piecewise-linear sweep over
// tent corners and crossings. max_level = 1 gives the first-level-only norm;
// max_level >= pair count reproduces landscape_l1 up to roundoff.
double landscape_l1_levels(const persistence_diagram& d, int max_level);

} // namespace hbm
