#pragma once

#include <vector>

#include "antlyzer/scalar.hpp"

namespace antlyzer {

enum class lp_rel { eq, ge, gt };

// a . x + a0  (= 0 | >= 0 | > 0)
struct lp_row {
    std::vector<scalar> a;
    scalar a0;
    lp_rel rel;
};

struct lp_outcome {
    bool feasible = false;     // the relaxation (gt weakened to >=) has a point
    scalar eps;                // max slack of the gt rows, capped at 1
    std::vector<scalar> point; // optimal x (exact); meaningful when feasible
};

// Decide strict feasibility of a constraint system by exact two-phase simplex
// over the ordered scalar field: maximize eps subject to the eq/ge rows and
// (gt row) >= eps, 0 <= eps <= 1. Free variables are split into differences of
// nonnegatives. Bland's rule; every pivot decision is an exact sign test.
//
// The strict system {eq, ge, gt} has a solution iff feasible && eps > 0, and
// then point is such a solution.
lp_outcome strict_feasibility_lp(const std::vector<lp_row>& rows, size_t nvars);

} // namespace antlyzer
